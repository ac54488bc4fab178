#include <doctest.h>

#include <set>
#include <vector>

#include "homflytop/blocks.hpp"
#include "homflytop/errors.hpp"
#include "homflytop/generate.hpp"
#include "support.hpp"

using namespace homflytop;

namespace {

std::vector<Sign> all(int n, Sign s) { return std::vector<Sign>(n, s); }

}  // namespace

TEST_SUITE("blocks") {
  TEST_CASE("single positive block") {
    const auto g = k32_graph();
    const auto b = biconnected_blocks(g, all(6, Sign::Positive));
    CHECK(b.blocks.size() == 1);
    CHECK(b.positive_blocks == 1);
    CHECK(b.negative_blocks == 0);
    CHECK(b.positive_vertices == 5);
    CHECK(b.positive_edges == 6);
    CHECK(b.writhe() == 6);
  }

  TEST_CASE("two positive bigons sharing a vertex") {
    const auto bigon = banded_theta_graph(2);
    const auto g = one_point_union(bigon, 1, bigon, 1);
    CHECK(g.num_vertices() == 3);
    const auto b = biconnected_blocks(g, all(4, Sign::Positive));
    CHECK(b.positive_blocks == 2);
    CHECK(b.negative_blocks == 0);
    CHECK(b.positive_vertices == 4);
    CHECK(b.positive_edges == 4);
  }

  TEST_CASE("positive and negative bigon sharing a vertex") {
    const auto bigon = banded_theta_graph(2);
    const auto g = one_point_union(bigon, 1, bigon, 1);
    const std::vector<Sign> signs{Sign::Positive, Sign::Positive, Sign::Negative, Sign::Negative};
    const auto b = biconnected_blocks(g, signs);
    CHECK(b.positive_blocks == 1);
    CHECK(b.negative_blocks == 1);
    CHECK(b.positive_edges == 2);
    CHECK(b.negative_edges == 2);
    CHECK(b.positive_vertices == 2);
    CHECK(b.negative_vertices == 2);
    CHECK(b.writhe() == 0);
  }

  TEST_CASE("mixed-sign block is rejected") {
    const auto g = banded_theta_graph(3);
    const std::vector<Sign> signs{Sign::Positive, Sign::Negative, Sign::Positive};
    CHECK_THROWS_AS(biconnected_blocks(g, signs), InputError);
  }

  TEST_CASE("bridges are blocks of their own") {
    // path e0 - v0 - e1
    const std::vector<std::pair<int, int>> ends{{0, 1}, {2, 1}};
    const std::vector<Sign> signs{Sign::Positive, Sign::Negative};
    const auto b = biconnected_blocks(3, ends, signs);
    CHECK(b.blocks.size() == 2);
    CHECK(b.positive_vertices == 2);
    CHECK(b.negative_vertices == 2);
  }

  TEST_CASE("blocks partition the edges") {
    for (const auto& g : homflytop::testing::corpus()) {
      const auto b = biconnected_blocks(g, all(g.num_edges(), Sign::Positive));
      std::multiset<int> seen;
      int vertex_total = 0;
      for (const auto& block : b.blocks) {
        seen.insert(block.edges.begin(), block.edges.end());
        vertex_total += static_cast<int>(block.vertices.size());
        CHECK(block.vertices.size() >= 2);
      }
      CHECK(static_cast<int>(seen.size()) == g.num_edges());
      CHECK(std::set<int>(seen.begin(), seen.end()).size() == seen.size());
      // Block-cut tree: sum of (block vertices - 1) equals vertices - 1.
      CHECK(vertex_total - static_cast<int>(b.blocks.size()) == g.num_vertices() - 1);
    }
  }
}
