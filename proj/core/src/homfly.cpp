#include "homflytop/homfly.hpp"

#include "homflytop/errors.hpp"
#include "homflytop/parking.hpp"

namespace homflytop {

DecoratedSubgraph full_subgraph(const PlaneBipartiteGraph& g) {
  return {EdgeSet::full(g.num_edges()), EdgeSet(g.num_edges())};
}

DecoratedSubgraph node_subgraph(const ArbNode& node) { return {dual_subgraph(node.A), node.S}; }

DecoratedSubgraph signed_subgraph(const PlaneBipartiteGraph& g, std::span<const Sign> signs) {
  if (static_cast<int>(signs.size()) != g.num_edges()) throw InputError("need one sign per edge");
  DecoratedSubgraph dec = full_subgraph(g);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (signs[i] == Sign::Negative) dec.dotted.insert(i);
  }
  return dec;
}

LinkDiagram median_diagram(const PlaneBipartiteGraph& g, const DecoratedSubgraph& dec) {
  if (!dec.dotted.is_subset_of(dec.present)) throw InputError("dotted edges must be present");
  std::vector<int> arc_index(g.num_edges(), -1);
  int present = 0;
  for (int id : dec.present.ids()) arc_index[id] = present++;
  // Present edges around each vertex, counterclockwise, and each edge's place.
  std::vector<std::vector<int>> around(g.num_vertices());
  std::vector<int> pos_at_e(g.num_edges()), pos_at_v(g.num_edges());
  int free_loops = 0;
  for (int x = 0; x < g.num_vertices(); ++x) {
    for (int id : g.rotation_edges(x)) {
      if (!dec.present.contains(id)) continue;
      (g.vertex(x).color == Color::E ? pos_at_e : pos_at_v)[id] = static_cast<int>(around[x].size());
      around[x].push_back(id);
    }
    if (around[x].empty()) ++free_loops;
  }
  auto step = [&](int x, int pos, int delta) {
    const int n = static_cast<int>(around[x].size());
    return around[x][(pos + delta + n) % n];
  };
  // Arc 2i runs along e's circle from edge i's crossing; arc 2i+1 along v's.
  std::vector<Crossing> crossings;
  for (int id : dec.present.ids()) {
    const auto [e, v] = g.edge(id);
    const int nw = 2 * arc_index[id];
    const int ne = 2 * arc_index[id] + 1;
    const int sw = 2 * arc_index[step(e, pos_at_e[id], -1)];
    const int se = 2 * arc_index[step(v, pos_at_v[id], +1)] + 1;
    if (dec.dotted.contains(id)) {
      crossings.push_back({{sw, se, ne, nw}, Sign::Negative});
    } else {
      crossings.push_back({{se, ne, nw, sw}, Sign::Positive});
    }
  }
  return LinkDiagram(std::move(crossings), free_loops);
}

LinkDiagram median_diagram(const PlaneBipartiteGraph& g) { return median_diagram(g, full_subgraph(g)); }

Laurent2 unlink_factor() { return Laurent2::monomial(1, -1, -1) - Laurent2::monomial(1, 1, -1); }

namespace {

Laurent2 power(const Laurent2& base, int k) {
  Laurent2 out = Laurent2::constant(1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

Laurent2 HomflyOracle::operator()(const LinkDiagram& d) {
  if (d.num_crossings() > cap_) {
    throw CapExceeded("diagram has " + std::to_string(d.num_crossings()) + " crossings; oracle cap is " +
                      std::to_string(cap_));
  }
  return compute(d);
}

Laurent2 HomflyOracle::compute(const LinkDiagram& d) {
  if (d.num_crossings() == 0) return power(unlink_factor(), std::max(d.free_loops(), 1) - 1);
  const std::string code = d.canonical_code();
  if (auto it = memo_.find(code); it != memo_.end()) return it->second;
  Laurent2 result;
  const auto pieces = d.split();
  if (pieces.size() > 1) {
    result = power(unlink_factor(), static_cast<int>(pieces.size()) - 1);
    for (const auto& piece : pieces) result *= compute(piece);
  } else {
    result = compute_connected(d);
  }
  memo_.emplace(code, result);
  return result;
}

Laurent2 HomflyOracle::compute_connected(const LinkDiagram& d) {
  // Base points: components by smallest label, each entered at that label.
  std::vector<int> order;
  for (const auto& cycle : d.component_cycles()) order.insert(order.end(), cycle.begin(), cycle.end());

  const Laurent2 vz = Laurent2::monomial(1, 1, 1);
  const Laurent2 minus_vinv_z = Laurent2::monomial(-1, -1, 1);
  const Laurent2 v2 = Laurent2::monomial(1, 2, 0);
  const Laurent2 vm2 = Laurent2::monomial(1, -2, 0);

  LinkDiagram current = d;
  Laurent2 multiplier = Laurent2::constant(1);
  Laurent2 acc;
  while (true) {
    // First crossing whose first passage is along the under-strand.
    int bad = -1;
    std::vector<bool> visited(current.num_crossings(), false);
    for (int label : order) {
      const int c = current.entry_of(label).first;
      if (visited[c]) continue;
      visited[c] = true;
      if (current.entry_is_under(label)) {
        bad = c;
        break;
      }
    }
    if (bad == -1) break;
    const Laurent2 smoothed = compute(current.smoothed(bad));
    if (current.crossings()[bad].sign == Sign::Positive) {
      acc += multiplier * vz * smoothed;
      multiplier *= v2;
    } else {
      acc += multiplier * minus_vinv_z * smoothed;
      multiplier *= vm2;
    }
    current = current.changed(bad);
  }
  acc += multiplier * power(unlink_factor(), current.num_components() - 1);
  return acc;
}

Laurent2 homfly_skein(const LinkDiagram& d, int crossing_cap) {
  HomflyOracle oracle(crossing_cap);
  return oracle(d);
}

TopPolynomial top_coefficient(const Laurent2& homfly, int n, int s) {
  const int e = n - s + 1;
  return {homfly.slice2(e).renamed("v"), e};
}

TopPolynomial top_via_tree(const ArbTree& tree, int n, int s) {
  TopPolynomial top{Laurent1("v"), n - s + 1};
  for (const auto& leaf : tree.type_one_leaves()) top.poly.add_term(n - s + 1 + 2 * leaf.k(), 1);
  return top;
}

TopPolynomial top_via_h(const Laurent1& h, int n, int s) {
  return {Laurent1::monomial("v", 1, n + s - 1) * substitute_power(h, "v", -2), n - s + 1};
}

TopPolynomial top_via_p(const Laurent1& p, int n, int s) {
  return {Laurent1::monomial("v", 1, n - s + 1) * substitute_power(p, "v", 2), n - s + 1};
}

std::vector<Laurent1> block_enumerators(const PlaneBipartiteGraph& g, const SignedBlockGraph& blocks) {
  std::vector<Laurent1> out;
  for (const auto& block : blocks.blocks) {
    const auto piece = g.restricted_to(EdgeSet::of(g.num_edges(), block.edges));
    const auto choice = default_choice_for_root(piece, 0);
    const auto dual = build_dual(piece, choice.root, choice.kappa);
    out.push_back(parking_enumerator(enumerate_parking(as_rooted_digraph(dual))));
  }
  return out;
}

Laurent1 homogeneous_top(const SignedBlockGraph& blocks, const std::vector<Laurent1>& block_p) {
  if (block_p.size() != blocks.blocks.size()) throw InputError("need one enumerator per block");
  const int k = blocks.positive_blocks;
  const int l = blocks.negative_blocks;
  const int sign_exponent = blocks.negative_edges - blocks.negative_vertices + l;
  const int v_exponent = blocks.writhe() - blocks.positive_vertices + blocks.negative_vertices + k - l;
  Laurent1 out = Laurent1::monomial("v", sign_exponent % 2 == 0 ? 1 : -1, v_exponent);
  for (std::size_t i = 0; i < block_p.size(); ++i) {
    const int exponent = blocks.blocks[i].sign == Sign::Positive ? 2 : -2;
    out *= substitute_power(block_p[i], "v", exponent);
  }
  return out;
}

MortonReport morton_audit(const LinkDiagram& d, HomflyOracle& oracle, bool alternating_contour) {
  MortonReport report;
  report.crossings = d.num_crossings();
  report.seifert = d.seifert_count();
  report.strict = alternating_contour;
  report.bound = report.crossings - report.seifert + (alternating_contour ? -1 : 1);
  report.maxdeg_z = oracle(d).max_degree2();
  return report;
}

}  // namespace homflytop
