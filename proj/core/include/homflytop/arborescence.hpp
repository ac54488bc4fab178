#pragma once

#include <optional>
#include <vector>

#include "homflytop/edge_set.hpp"
#include "homflytop/plane_graph.hpp"

namespace homflytop {

/// Set of dual edges forming a tree directed away from `root`, possibly
/// leaving some vertices isolated.
struct Arborescence {
  EdgeSet edges;
  int root = 0;

  friend bool operator==(const Arborescence& a, const Arborescence& b) {
    return a.root == b.root && a.edges == b.edges;
  }
};

enum class LeafType { Internal, TypeI, TypeII };

struct ArbNode {
  EdgeSet A;
  EdgeSet S;
  std::optional<int> augmenting;
  int right = -1;  // (A + delta, S)
  int left = -1;   // (A, S + delta)
  int parent = -1;
  LeafType type = LeafType::Internal;
};

struct ArbLeaf {
  int node;
  LeafType type;
  EdgeSet A;
  EdgeSet S;
  int k() const { return S.size(); }
};

/// Binary tree of (arborescence, skipped set) pairs. Node 0 is the root
/// (empty, empty); leaves are listed right to left.
struct ArbTree {
  int dual_root = 0;
  int dual_kappa = 0;
  std::vector<ArbNode> nodes;
  std::vector<int> leaves;

  std::vector<ArbLeaf> type_one_leaves() const;
  std::vector<ArbLeaf> type_two_leaves() const;
};

/// Vertices reachable from the root along edges of A.
std::vector<bool> root_component(const DualDigraph& dual, const EdgeSet& A);

/// A is loop-free and every vertex reached by A is reached from the root by a
/// unique directed path.
bool is_arborescence(const DualDigraph& dual, const EdgeSet& A);
bool is_spanning_arborescence(const DualDigraph& dual, const EdgeSet& A);

/// First admissible edge met by walking counterclockwise around the root
/// component of A, starting from the corner of kappa at the root: an edge not
/// in S, leaving the root component and ending at a vertex not yet reached.
std::optional<int> augmenting_edge(const DualDigraph& dual, const EdgeSet& A, const EdgeSet& S);

/// The "always turn right" arborescence, computed by a counterclockwise
/// depth-first search starting at kappa.
Arborescence clocked_arborescence(const DualDigraph& dual);

ArbTree build_arb_tree(const DualDigraph& dual);

/// All spanning arborescences rooted at the dual root, found by choosing an
/// in-edge for every other vertex. Sorted by edge set.
std::vector<Arborescence> spanning_arborescences_bruteforce(const DualDigraph& dual);

/// Every dual edge leaving the root component of A lies in S.
bool has_blocked_frontier(const DualDigraph& dual, const EdgeSet& A, const EdgeSet& S);

}  // namespace homflytop
