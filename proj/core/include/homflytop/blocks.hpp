#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "homflytop/plane_graph.hpp"

namespace homflytop {

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

struct Block {
  std::vector<int> edges;
  std::vector<int> vertices;
  Sign sign = Sign::Positive;
};

/// Biconnected decomposition of a graph with signed edges in which every
/// block is sign-homogeneous. Vertex counts tally cut vertices once per
/// block containing them.
struct SignedBlockGraph {
  std::vector<Block> blocks;
  int positive_blocks = 0;
  int negative_blocks = 0;
  int positive_vertices = 0;
  int positive_edges = 0;
  int negative_vertices = 0;
  int negative_edges = 0;

  int writhe() const { return positive_edges - negative_edges; }
};

/// Throws InputError if a block mixes signs or the graph is disconnected.
SignedBlockGraph biconnected_blocks(int num_vertices, std::span<const std::pair<int, int>> endpoints,
                                    std::span<const Sign> signs);

SignedBlockGraph biconnected_blocks(const PlaneBipartiteGraph& g, std::span<const Sign> signs);

}  // namespace homflytop
