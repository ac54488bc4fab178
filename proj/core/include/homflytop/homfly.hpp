#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homflytop/arborescence.hpp"
#include "homflytop/blocks.hpp"
#include "homflytop/link_diagram.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"

namespace homflytop {

/// Present edges of G, some of them dotted. Every vertex of G stays.
struct DecoratedSubgraph {
  EdgeSet present;
  EdgeSet dotted;
};

DecoratedSubgraph full_subgraph(const PlaneBipartiteGraph& g);
/// Node (A, S) of the tree of arborescences: edges outside A, with S dotted.
DecoratedSubgraph node_subgraph(const ArbNode& node);
/// Edges with a negative sign become dotted.
DecoratedSubgraph signed_subgraph(const PlaneBipartiteGraph& g, std::span<const Sign> signs);

/// One crossing per present edge, positive unless dotted, and one Seifert
/// circle per vertex: counterclockwise around E-vertices, clockwise around
/// V-vertices. Vertices without present edges become free loops.
LinkDiagram median_diagram(const PlaneBipartiteGraph& g, const DecoratedSubgraph& dec);
LinkDiagram median_diagram(const PlaneBipartiteGraph& g);

/// (v^-1 - v) / z, the factor contributed by each extra split component.
Laurent2 unlink_factor();

/// Skein-relation HOMFLY polynomial, normalised by P(unknot) = 1 and
/// v^-1 P+ - v P- = z P0. Diagrams are reduced to descending ones crossing
/// by crossing; results are cached by canonical code.
class HomflyOracle {
 public:
  explicit HomflyOracle(int crossing_cap = 14) : cap_(crossing_cap) {}

  /// Throws CapExceeded when the diagram has more crossings than the cap.
  Laurent2 operator()(const LinkDiagram& d);
  int cap() const { return cap_; }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  Laurent2 compute(const LinkDiagram& d);
  Laurent2 compute_connected(const LinkDiagram& d);

  int cap_;
  std::unordered_map<std::string, Laurent2> memo_;
};

Laurent2 homfly_skein(const LinkDiagram& d, int crossing_cap = 14);

struct TopPolynomial {
  Laurent1 poly{"v"};
  int z_exponent = 0;
  friend bool operator==(const TopPolynomial&, const TopPolynomial&) = default;
};

/// Coefficient of z^(n - s + 1).
TopPolynomial top_coefficient(const Laurent2& homfly, int n, int s);
/// Sum over type-I leaves of v^(n - s + 1 + 2k), k the skipped count.
TopPolynomial top_via_tree(const ArbTree& tree, int n, int s);
/// v^(n + s - 1) h(v^-2).
TopPolynomial top_via_h(const Laurent1& h, int n, int s);
/// v^(n - s + 1) p(v^2).
TopPolynomial top_via_p(const Laurent1& p, int n, int s);

/// Parking enumerator of the dual of each block, in block order.
std::vector<Laurent1> block_enumerators(const PlaneBipartiteGraph& g, const SignedBlockGraph& blocks);

/// Product formula for a homogeneous diagram:
/// (-1)^(n- - s- + l) v^(w - s+ + s- + k - l) prod p_i(v^2) prod p'_j(v^-2).
Laurent1 homogeneous_top(const SignedBlockGraph& blocks, const std::vector<Laurent1>& block_p);

struct MortonReport {
  int crossings = 0;
  int seifert = 0;
  std::optional<int> maxdeg_z;  // empty when P = 0
  int bound = 0;                // n - s + 1, or n - s - 1 when strict
  bool strict = false;
  bool holds() const { return !maxdeg_z || *maxdeg_z <= bound; }
};

/// Max z-degree of the oracle value against Morton's bound, or against the
/// sharper bound for diagrams with an alternating contour.
MortonReport morton_audit(const LinkDiagram& d, HomflyOracle& oracle, bool alternating_contour);

}  // namespace homflytop
