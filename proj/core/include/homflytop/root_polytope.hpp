#pragma once

#include <vector>

#include "homflytop/arborescence.hpp"
#include "homflytop/edge_set.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"

namespace homflytop {

/// Parallel edges give the same vector e + v; points are numbered by first
/// occurrence of each (e, v) pair.
struct PointMap {
  std::vector<int> point_of_edge;
  std::vector<EdgeEnds> points;
  int size() const { return static_cast<int>(points.size()); }
};
PointMap root_polytope_points(const PlaneBipartiteGraph& g);

/// One 0/1 row over the vertex order of g per edge.
std::vector<std::vector<int>> coordinate_matrix(const PlaneBipartiteGraph& g);

struct AffineCheck {
  bool cycle_free = true;
  int rank = 0;              // linear rank of the vectors e + v
  bool independent = true;   // rank == number of edges
  bool agree() const { return cycle_free == independent; }
};
/// The combinatorial answer (no cycle, parallel pairs included) and the exact
/// rank of the coordinate vectors. Affine and linear independence coincide
/// because every vector has coordinate sum 1 over E.
AffineCheck affine_independence_check(const PlaneBipartiteGraph& g, const EdgeSet& edges);

/// Simplex of two spanning trees meet in a common face: the union digraph
/// (t1 directed E -> V, t2 directed V -> E, parallel arcs merged) has no
/// directed cycle of length three or more.
bool compatible(const PlaneBipartiteGraph& g, const EdgeSet& t1, const EdgeSet& t2);

/// Direct search for a simple cycle, of length at least four, whose edges
/// alternate between the two trees.
bool has_alternating_cycle(const PlaneBipartiteGraph& g, const EdgeSet& t1, const EdgeSet& t2);

std::vector<EdgeSet> spanning_trees(const PlaneBipartiteGraph& g);

/// Valence minus one at each E-vertex, in vertex index order.
using Hypertree = std::vector<int>;
std::vector<Hypertree> hypertrees(const PlaneBipartiteGraph& g);

struct TreeSimplex {
  EdgeSet edges;
  std::vector<int> points;  // sorted point ids
  int attach_count = 0;
};

struct Triangulation {
  std::vector<TreeSimplex> simplices;  // shelling order
  int dimension = 0;
  Laurent1 f{"y"};
  Laurent1 h{"x"};
};

/// Primal duals of the type-I leaves, right to left. Throws
/// InvariantViolation if the simplices fail to triangulate.
Triangulation triangulation_from_arbtree(const ArbTree& tree, const PlaneBipartiteGraph& g);

/// Attach counts c_i of an ordered list of maximal simplices (sorted point
/// sets). Throws InvariantViolation if the order is not a shelling.
std::vector<int> verify_shelling(const std::vector<std::vector<int>>& simplices);

/// f(y) = sum over faces F of the complex, including the empty face, of
/// y^(d + 1 - |F|).
Laurent1 f_vector(const std::vector<std::vector<int>>& simplices, int dimension);
Laurent1 h_from_f(const Laurent1& f);
Laurent1 h_from_shelling(const std::vector<int>& attach_counts, int dimension);

}  // namespace homflytop
