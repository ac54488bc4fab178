#include <doctest.h>
#include <json.hpp>

#include "homflytop/arborescence.hpp"
#include "homflytop/errors.hpp"
#include "homflytop/generate.hpp"
#include "homflytop/io.hpp"
#include "homflytop/parking.hpp"
#include "homflytop/root_polytope.hpp"
#include "support.hpp"

using namespace homflytop;
using homflytop::testing::corpus;
using homflytop::testing::data_path;
using homflytop::testing::k32_dual;
using homflytop::testing::poly1;
using nlohmann::json;

namespace {

std::string with(const std::string& key, const json& value) {
  auto doc = json::parse(graph_document_json(k32_graph(), RootChoice{1, 0}));
  if (value.is_null()) {
    doc.erase(key);
  } else {
    doc[key] = value;
  }
  return doc.dump();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("fixture documents") {
    const auto k32 = load_graph_document(data_path("k32.json"));
    CHECK(k32.graph.num_edges() == 6);
    CHECK(k32.graph.num_faces() == 3);
    CHECK(k32.root_choice() == RootChoice{1, 0});
    CHECK(graph_document_json(k32.graph) == graph_document_json(k32_graph()));

    const auto single = load_graph_document(data_path("single_edge.json"));
    CHECK(single.graph.num_faces() == 1);
    CHECK(load_graph_document(data_path("bigon.json")).graph.num_faces() == 2);
    CHECK(load_graph_document(data_path("theta.json")).graph.num_faces() == 3);

    const auto sum = load_graph_document(data_path("hopf_sum.json"));
    REQUIRE(sum.signs.has_value());
    CHECK(sum.signs->size() == 4);
    CHECK(sum.signs->at(2) == Sign::Negative);
  }

  TEST_CASE("root choice defaults") {
    auto doc = parse_graph_document(with("kappa", nullptr));
    CHECK(doc.root_choice() == RootChoice{1, 0});
    doc = parse_graph_document(with("r0", nullptr));
    CHECK(doc.root_choice() == RootChoice{1, 0});
    doc = parse_graph_document(with("kappa", 1));
    CHECK_THROWS_AS(doc.root_choice(), InputError);
  }

  TEST_CASE("documents round trip") {
    for (const auto& g : corpus()) {
      const auto text = graph_document_json(g, admissible_roots(g).back());
      const auto doc = parse_graph_document(text);
      CHECK(graph_document_json(doc.graph, doc.root_choice()) == text);
      CHECK(doc.root_choice() == admissible_roots(g).back());
    }
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_graph_document("{"), InputError);
    CHECK_THROWS_AS(parse_graph_document("[]"), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("edges", json::array({json::array({"e0", "nowhere"})}))), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("edges", json::array({json::array({"e0"})}))), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("rotation", json::array())), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("r0", json::array({0, "up"}))), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("r0", json::array({9, "ev"}))), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("signs", json::array({1, 1}))), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("signs", json::array({1, 1, 1, 1, 1, 0}))), InputError);
    CHECK_THROWS_AS(parse_graph_document(with("V", json::array({"v0", "v0"}))), InputError);
    CHECK_THROWS_AS(load_graph_document(data_path("missing.json")), InputError);
    // Rotation that is not planar.
    auto doc = json::parse(with("kappa", 0));
    doc["rotation"]["v0"] = json::array({0, 2, 4});
    CHECK_THROWS_AS(parse_graph_document(doc.dump()), InputError);
  }

  TEST_CASE("json exports") {
    const auto g = k32_graph();
    const auto faces = json::parse(faces_json(g));
    CHECK(faces["faces"].size() == 3);
    CHECK(faces["faces"][0]["darts"].size() == 4);

    const auto dual = json::parse(dual_json(k32_dual()));
    CHECK(dual["root"] == 1);
    CHECK(dual["edges"].size() == 6);

    const auto tree = build_arb_tree(k32_dual());
    const auto tree_doc = json::parse(arb_tree_json(tree));
    CHECK(tree_doc["leaves"].size() == 6);
    int type_one = 0;
    for (const auto& leaf : tree_doc["leaves"]) type_one += leaf["type"] == "I" ? 1 : 0;
    CHECK(type_one == 3);

    const auto tri = triangulation_from_arbtree(tree, g);
    const auto tri_doc = json::parse(triangulation_json(g, tri, true));
    CHECK(tri_doc["dimension"] == 3);
    CHECK(tri_doc["simplices"].size() == 3);
    CHECK(tri_doc["coordinates"].size() == 6);
    CHECK_FALSE(json::parse(triangulation_json(g, tri, false)).contains("coordinates"));

    const auto pk = json::parse(parking_json(enumerate_parking(as_rooted_digraph(k32_dual())), 1));
    CHECK(pk["count"] == 3);
    CHECK(pk["functions"][0]["values"].size() == 2);
  }

  TEST_CASE("csv and dot exports") {
    CHECK(coefficients_csv(poly1("1 + 2*u", "u")) == "exponent,coefficient\n0,1\n1,2\n");
    const auto g = k32_graph();
    const auto dual = k32_dual();
    CHECK(graph_dot(g).rfind("graph G {", 0) == 0);
    CHECK(dual_dot(dual).rfind("digraph Gstar {", 0) == 0);
    CHECK(overlay_dot(g, dual).rfind("digraph Overlay {", 0) == 0);
    const auto tree_dot = arb_tree_dot(build_arb_tree(dual));
    CHECK(tree_dot.find("ordering=out") != std::string::npos);
    CHECK(tree_dot.back() == '\n');
  }
}
