#include <doctest.h>

#include <algorithm>
#include <set>

#include "homflytop/arborescence.hpp"
#include "homflytop/errors.hpp"
#include "homflytop/generate.hpp"
#include "homflytop/root_polytope.hpp"
#include "support.hpp"

using namespace homflytop;
using homflytop::testing::corpus;
using homflytop::testing::k32_dual;
using homflytop::testing::outer_dual;
using homflytop::testing::poly1;

namespace {

// e1 v1 e2 v2 around a square; edges a = e1v1, b = e2v1, c = e2v2, d = e1v2.
PlaneBipartiteGraph square_graph() {
  std::vector<VertexInfo> vs{{"e1", Color::E}, {"e2", Color::E}, {"v1", Color::V}, {"v2", Color::V}};
  std::vector<EdgeEnds> es{{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  return PlaneBipartiteGraph(vs, es, {{0, 3}, {1, 2}, {0, 1}, {2, 3}});
}

EdgeSet subset_of(int n, unsigned mask) {
  EdgeSet s(n);
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) s.insert(i);
  }
  return s;
}

}  // namespace

TEST_SUITE("root_polytope") {
  TEST_CASE("points and coordinates") {
    const auto g = k32_graph();
    const auto rows = coordinate_matrix(g);
    REQUIRE(rows.size() == 6);
    for (int i = 0; i < 6; ++i) {
      CHECK(std::count(rows[i].begin(), rows[i].end(), 1) == 2);
      CHECK(rows[i][g.edge(i).e] == 1);
      CHECK(rows[i][g.edge(i).v] == 1);
    }
    CHECK(root_polytope_points(g).size() == 6);
    const auto theta = root_polytope_points(banded_theta_graph(3));
    CHECK(theta.size() == 1);
    CHECK(theta.point_of_edge == std::vector<int>{0, 0, 0});
  }

  TEST_CASE("affine independence") {
    const auto k32 = k32_graph();
    const auto none = affine_independence_check(k32, EdgeSet(6));
    CHECK(none.independent);
    CHECK(none.cycle_free);
    CHECK(none.rank == 0);

    const auto bigon = affine_independence_check(banded_theta_graph(2), EdgeSet::full(2));
    CHECK_FALSE(bigon.independent);
    CHECK_FALSE(bigon.cycle_free);
    CHECK(bigon.rank == 1);

    for (const auto& tree : spanning_trees(k32)) {
      const auto check = affine_independence_check(k32, tree);
      CHECK(check.independent);
      CHECK(check.cycle_free);
      // 4 independent vectors span an affine 3-space: dimension s - 2.
      CHECK(check.rank - 1 == k32.num_vertices() - 2);
    }
  }

  TEST_CASE("affine rank agrees with the cycle test on every subset") {
    for (const auto& g : corpus()) {
      const int n = g.num_edges();
      for (unsigned mask = 0; mask < (1u << n); ++mask) CHECK(affine_independence_check(g, subset_of(n, mask)).agree());
    }
  }

  TEST_CASE("compatibility") {
    const auto k32 = k32_graph();
    const auto trees = spanning_trees(k32);
    CHECK(trees.size() == 12);
    for (const auto& t : trees) CHECK(compatible(k32, t, t));

    const auto square = square_graph();
    const auto t1 = EdgeSet::of(4, {0, 1, 2});
    const auto t2 = EdgeSet::of(4, {1, 2, 3});
    CHECK(has_alternating_cycle(square, t1, t2));
    CHECK_FALSE(compatible(square, t1, t2));
    CHECK_FALSE(compatible(square, t2, t1));
    // Trees missing opposite sides of the square cannot alternate around it.
    CHECK(compatible(square, EdgeSet::of(4, {1, 2, 3}), EdgeSet::of(4, {0, 1, 3})));
    CHECK_FALSE(compatible(square, EdgeSet::of(4, {0, 1, 2}), EdgeSet::of(4, {0, 1, 3})));

    const auto tree = build_arb_tree(k32_dual());
    std::vector<EdgeSet> simplices;
    for (const auto& leaf : tree.type_one_leaves()) simplices.push_back(leaf.A.complement());
    REQUIRE(simplices.size() == 3);
    for (const auto& a : simplices) {
      for (const auto& b : simplices) CHECK(compatible(k32, a, b));
    }
  }

  TEST_CASE("compatibility agrees with the alternating-cycle search") {
    int pairs = 0;
    for (const auto& g : corpus()) {
      const auto trees = spanning_trees(g);
      if (trees.size() > 40) continue;
      for (const auto& a : trees) {
        for (const auto& b : trees) {
          CHECK(compatible(g, a, b) == !has_alternating_cycle(g, a, b));
          ++pairs;
        }
      }
    }
    CHECK(pairs > 5000);
  }

  TEST_CASE("hypertrees") {
    CHECK(hypertrees(single_edge_graph()) == std::vector<Hypertree>{{0}});
    CHECK(hypertrees(banded_theta_graph(3)) == std::vector<Hypertree>{{0}});
    const auto k32 = hypertrees(k32_graph());
    CHECK(std::set<Hypertree>(k32.begin(), k32.end()) == std::set<Hypertree>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  }

  TEST_CASE("triangulations of fixtures") {
    const auto single = single_edge_graph();
    const auto t1 = triangulation_from_arbtree(build_arb_tree(build_dual(single, 0, 0)), single);
    CHECK(t1.simplices.size() == 1);
    CHECK(t1.dimension == 0);
    CHECK(t1.f == poly1("y + 1", "y"));
    CHECK(t1.h == poly1("x", "x"));

    const auto bigon = banded_theta_graph(2);
    const auto t2 = triangulation_from_arbtree(build_arb_tree(outer_dual(bigon)), bigon);
    CHECK(t2.simplices.size() == 1);
    CHECK(t2.dimension == 0);

    const auto k32 = k32_graph();
    const auto t3 = triangulation_from_arbtree(build_arb_tree(k32_dual()), k32);
    CHECK(t3.simplices.size() == 3);
    CHECK(t3.dimension == 3);
    for (const auto& s : t3.simplices) CHECK(s.points.size() == 4);
    std::vector<int> c;
    for (const auto& s : t3.simplices) c.push_back(s.attach_count);
    CHECK(c == std::vector<int>{0, 1, 1});
    CHECK(t3.f == poly1("y^4 + 6*y^3 + 12*y^2 + 10*y + 3", "y"));
    CHECK(t3.h == poly1("x^4 + 2*x^3", "x"));
    CHECK(t3.h.sum_of_coefficients() == 3);
  }

  TEST_CASE("shelling verification") {
    CHECK(verify_shelling({{0, 1, 2}}) == std::vector<int>{0});
    CHECK(verify_shelling({{0, 1, 2}, {1, 2, 3}, {0, 2, 3}}) == std::vector<int>{0, 1, 2});
    CHECK(verify_shelling({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}) == std::vector<int>{0, 1, 1});
    // No shared facet.
    CHECK_THROWS_AS(verify_shelling({{0, 1, 2}, {2, 3, 4}}), InvariantViolation);
    // {3,4,0} attaches along {3,4} but also touches the first triangle at 0.
    CHECK_THROWS_AS(verify_shelling({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}}), InvariantViolation);
  }

  TEST_CASE("f and h of abstract complexes") {
    CHECK(f_vector({{0, 1}}, 1) == poly1("y^2 + 2*y + 1", "y"));
    CHECK(h_from_f(poly1("y^2 + 2*y + 1", "y")) == poly1("x^2", "x"));
    CHECK(f_vector({{0, 1}, {1, 2}}, 1) == poly1("y^2 + 3*y + 2", "y"));
    CHECK(h_from_shelling({0, 1}, 1) == poly1("x^2 + x", "x"));
    CHECK(h_from_f(poly1("y^2 + 3*y + 2", "y")) == poly1("x^2 + x", "x"));
  }

  TEST_CASE("triangulation invariants on the corpus") {
    for (const auto& g : corpus()) {
      const auto expected_simplices = hypertrees(g).size();
      std::optional<Laurent1> first_h;
      std::optional<Laurent1> first_f;
      for (const auto& choice : admissible_roots(g)) {
        const auto tree = build_arb_tree(build_dual(g, choice.root, choice.kappa));
        const auto tri = triangulation_from_arbtree(tree, g);
        CHECK(tri.simplices.size() == expected_simplices);
        CHECK(tri.dimension == g.num_vertices() - 2);
        std::multiset<int> c;
        std::vector<int> counts;
        std::vector<std::vector<int>> point_sets;
        for (const auto& s : tri.simplices) {
          c.insert(s.attach_count);
          counts.push_back(s.attach_count);
          point_sets.push_back(s.points);
        }
        std::multiset<int> k;
        for (const auto& leaf : tree.type_one_leaves()) k.insert(leaf.k());
        CHECK(c == k);
        CHECK(verify_shelling(point_sets) == counts);
        CHECK(h_from_f(tri.f) == h_from_shelling(counts, tri.dimension));
        CHECK(tri.h.sum_of_coefficients() == static_cast<long>(expected_simplices));
        for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
          for (std::size_t j = 0; j < i; ++j) CHECK(compatible(g, tri.simplices[i].edges, tri.simplices[j].edges));
        }
        if (!first_h) {
          first_h = tri.h;
          first_f = tri.f;
        } else {
          CHECK(tri.h == *first_h);
          CHECK(tri.f == *first_f);
        }
      }
    }
  }
}
