#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homflytop/arborescence.hpp"
#include "homflytop/blocks.hpp"
#include "homflytop/parking.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/root_polytope.hpp"

namespace homflytop {

/// Graph document: vertex names per colour class, edges as name pairs,
/// counterclockwise rotations as edge ids, and an optional root given as a
/// dart [edge, "ev" | "ve"] whose left face is r0.
struct GraphDocument {
  PlaneBipartiteGraph graph;
  std::optional<Dart> root_dart;
  std::optional<int> kappa;
  std::optional<std::vector<Sign>> signs;

  /// The root choice named by the document; missing parts are filled from
  /// kappa = the first admissible edge of r0, or r0 = the face kappa points to,
  /// or kappa = 0.
  RootChoice root_choice() const;
};

/// Throws InputError on malformed documents or invalid graphs.
GraphDocument parse_graph_document(std::string_view json_text);
GraphDocument load_graph_document(const std::string& path);
std::string graph_document_json(const PlaneBipartiteGraph& g, std::optional<RootChoice> root = std::nullopt,
                                const std::vector<Sign>* signs = nullptr);

std::string faces_json(const PlaneBipartiteGraph& g);
std::string dual_json(const DualDigraph& dual);
std::string arb_tree_json(const ArbTree& tree);
std::string triangulation_json(const PlaneBipartiteGraph& g, const Triangulation& tri, bool with_coordinates);
std::string parking_json(const std::vector<ParkingFunction>& functions, int root);
/// `exponent,coefficient` rows.
std::string coefficients_csv(const Laurent1& p);

std::string graph_dot(const PlaneBipartiteGraph& g);
std::string dual_dot(const DualDigraph& dual);
/// G and G* in one picture, each dual edge drawn through its primal edge.
std::string overlay_dot(const PlaneBipartiteGraph& g, const DualDigraph& dual);
/// Left children are emitted first so the right child is drawn on the right.
std::string arb_tree_dot(const ArbTree& tree);

}  // namespace homflytop
