#pragma once

#include <vector>

#include "homflytop/arborescence.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"

namespace homflytop {

/// Directed multigraph with a distinguished root; loops are allowed and never
/// count toward in-degrees.
struct RootedDigraph {
  int num_vertices = 0;
  int root = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
};

RootedDigraph as_rooted_digraph(const DualDigraph& dual);

/// Values indexed by vertex; the root entry is always 0 and ignored.
struct ParkingFunction {
  std::vector<int> values;
  int index() const;
  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
};

/// Arcs into r whose tail lies outside `subset`. Throws InputError unless r
/// is in the subset and the root is not.
int relative_indegree(const RootedDigraph& d, const std::vector<bool>& subset, int r);

/// Checks the defining condition over every nonempty subset of non-root
/// vertices. Throws InputError when `values` is not indexed by the vertices.
bool is_parking_function(const RootedDigraph& d, const std::vector<int>& values);

/// Every parking function, found by scanning the box 0 <= pi(r) < indeg(r).
/// Sorted lexicographically.
std::vector<ParkingFunction> enumerate_parking(const RootedDigraph& d);

/// p(u) = sum of u^index.
Laurent1 parking_enumerator(const std::vector<ParkingFunction>& functions);

/// pi(r) = number of skipped edges pointing to r. Throws InputError unless A
/// is a spanning arborescence.
ParkingFunction parking_from_leaf(const DualDigraph& dual, const EdgeSet& A, const EdgeSet& S);

/// Inverse of parking_from_leaf: walks down the tree of arborescences, going
/// left at delta = (q, r) while pi(r) exceeds the skipped edges into r so
/// far. Throws InputError when pi is not a parking function.
ArbLeaf arborescence_from_parking(const ParkingFunction& pi, const DualDigraph& dual);

}  // namespace homflytop
