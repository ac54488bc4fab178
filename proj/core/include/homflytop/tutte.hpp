#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"

namespace homflytop {

/// Undirected multigraph; loops and parallel edges allowed.
struct Multigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

bool is_connected(const Multigraph& k);

/// Tutte polynomial in (x, y) by deletion-contraction. Throws InputError on
/// disconnected input and CapExceeded above `edge_cap` edges.
Laurent2 tutte(const Multigraph& k, int edge_cap = 10);

/// Both orientations of every edge; loops stay single loops each way.
std::vector<std::pair<int, int>> doubled_arcs(const Multigraph& k);

/// p_J(u) for J the antiparallel doubling of K, computed by brute force, and
/// u^b1(K) T_K(1, 1/u) computed from the Tutte polynomial.
struct TutteComparison {
  Laurent1 parking{"u"};
  Laurent1 tutte_side{"u"};
  bool agree() const { return parking == tutte_side; }
};
TutteComparison doubled_graph_crosscheck(const Multigraph& k);

/// For G whose E-vertices all have degree 2: K* has vertex set V and an edge
/// per E-vertex. Empty when some E-vertex has another degree.
std::optional<Multigraph> contracted_graph(const PlaneBipartiteGraph& g);

/// p of the dual of G (rooted at `root_face`) against u^(|V|-1) T_K*(1/u, 1).
TutteComparison dual_crosscheck(const PlaneBipartiteGraph& g, int root_face);

/// Canonical form under vertex relabelling (sorted edge list).
std::vector<std::pair<int, int>> canonical_form(const Multigraph& k);

/// All connected multigraphs with at most `max_edges` edges up to
/// isomorphism, the one-vertex graph included.
std::vector<Multigraph> connected_multigraphs(int max_edges);

}  // namespace homflytop
