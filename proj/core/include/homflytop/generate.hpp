#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "homflytop/plane_graph.hpp"

namespace homflytop {

/// e0 - v0 with trivial rotations: one face.
PlaneBipartiteGraph single_edge_graph();

/// Two vertices joined by `bands` parallel edges (bands >= 1). Two bands give
/// the bigon C2 (median: positive Hopf link); three give the theta graph
/// (median: right-handed trefoil).
PlaneBipartiteGraph banded_theta_graph(int bands);

/// K_{3,2} with E = {e0,e1,e2} on a horizontal line, v0 below and v1 above.
/// Edge ids: 0 = e0v0, 1 = e0v1, 2 = e1v0, 3 = e1v1, 4 = e2v0, 5 = e2v1.
/// The outer face is the left face of dart v0 -> e0, so kappa = 0 is
/// admissible for it.
PlaneBipartiteGraph k32_graph();

/// One-point union of two plane graphs identifying `vertex_a` of `a` with
/// `vertex_b` of `b` (same colour). Edges of `b` follow those of `a`; around
/// the shared vertex, b's edges form a contiguous interval after a's.
PlaneBipartiteGraph one_point_union(const PlaneBipartiteGraph& a, int vertex_a, const PlaneBipartiteGraph& b,
                                    int vertex_b);

/// Random connected plane bipartite graph with exactly `num_edges` edges,
/// grown from a single edge by pendant insertions and face-splitting chords.
PlaneBipartiteGraph random_plane_bipartite_graph(std::mt19937_64& rng, int num_edges);

/// Random plane bipartite graph in which every E-vertex has degree 2, i.e.
/// the subdivision of a random plane multigraph with `num_subdivided` edges.
PlaneBipartiteGraph random_subdivided_graph(std::mt19937_64& rng, int num_subdivided);

/// Deterministic corpus: `count` graphs with edge counts spread over
/// [1, max_edges]; every fourth graph is a subdivision.
std::vector<PlaneBipartiteGraph> generate_corpus(std::uint64_t seed, int count, int max_edges);

}  // namespace homflytop
