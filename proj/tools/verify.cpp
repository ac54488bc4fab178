#include "verify.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "homflytop/arborescence.hpp"
#include "homflytop/errors.hpp"
#include "homflytop/parking.hpp"
#include "homflytop/root_polytope.hpp"

namespace homflytop::cli {

namespace {

std::string choice_text(const RootChoice& c) {
  return "(r0=" + std::to_string(c.root) + ", kappa=" + std::to_string(c.kappa) + ")";
}

class Checker {
 public:
  Checker(VerifyReport& report, std::optional<RootChoice> choice) : report_(report), choice_(choice) {}

  void expect(bool ok, const std::string& invariant, const std::string& detail) {
    if (!ok) report_.failures.push_back({invariant, detail, choice_});
  }

 private:
  VerifyReport& report_;
  std::optional<RootChoice> choice_;
};

void check_choice(const PlaneBipartiteGraph& g, const RootChoice& choice, const VerifyOptions& options,
                  HomflyOracle& oracle, VerifyReport& report) {
  Checker check(report, choice);
  ChoiceReport out;
  out.choice = choice;
  const int n = g.num_edges();
  const int s = g.num_vertices();
  const DualDigraph dual = build_dual(g, choice.root, choice.kappa);
  check.expect(check_strong_connectivity(dual), "dual strongly connected", "some face cannot reach another");

  const ArbTree tree = build_arb_tree(dual);
  const auto leaves = tree.type_one_leaves();
  const auto blocked = tree.type_two_leaves();
  out.type_one = static_cast<int>(leaves.size());
  out.type_two = static_cast<int>(blocked.size());
  for (const auto& leaf : leaves) out.skipped_counts.push_back(leaf.k());

  std::vector<EdgeSet> from_tree;
  for (const auto& leaf : leaves) from_tree.push_back(leaf.A);
  std::sort(from_tree.begin(), from_tree.end());
  const bool distinct = std::adjacent_find(from_tree.begin(), from_tree.end()) == from_tree.end();
  check.expect(distinct, "arborescences appear once", "a spanning arborescence labels two leaves");
  std::vector<EdgeSet> brute;
  for (const auto& a : spanning_arborescences_bruteforce(dual)) brute.push_back(a.edges);
  check.expect(from_tree == brute, "type-I leaves are all spanning arborescences",
               std::to_string(from_tree.size()) + " leaves vs " + std::to_string(brute.size()) + " by brute force");
  check.expect(!leaves.empty() && leaves.front().A == clocked_arborescence(dual).edges,
               "rightmost leaf is the clocked arborescence", "first type-I leaf differs");
  for (const auto& leaf : blocked) {
    check.expect(has_blocked_frontier(dual, leaf.A, leaf.S), "type-II frontier skipped",
                 "an edge leaving the root component is not skipped");
  }

  try {
    const Triangulation tri = triangulation_from_arbtree(tree, g);
    for (const auto& simplex : tri.simplices) out.attach_counts.push_back(simplex.attach_count);
    check.expect(out.attach_counts == out.skipped_counts, "attach counts equal skipped counts",
                 "shelling and tree disagree");
    out.f = tri.f;
    out.h = tri.h;
    check.expect(h_from_f(tri.f) == h_from_shelling(out.attach_counts, tri.dimension), "h from f equals h from shelling",
                 tri.f.to_string());
  } catch (const InvariantViolation& err) {
    check.expect(false, err.invariant(), err.what());
  }

  const auto functions = enumerate_parking(as_rooted_digraph(dual));
  out.p = parking_enumerator(functions);
  check.expect(static_cast<int>(functions.size()) == out.type_one, "parking functions match leaves",
               std::to_string(functions.size()) + " vs " + std::to_string(out.type_one));
  Laurent1 from_leaves("u");
  std::set<std::vector<int>> images;
  for (const auto& leaf : leaves) {
    from_leaves.add_term(leaf.k(), 1);
    const auto pi = parking_from_leaf(dual, leaf.A, leaf.S);
    check.expect(pi.index() == leaf.k(), "parking index equals skipped count", "index mismatch");
    check.expect(is_parking_function(as_rooted_digraph(dual), pi.values), "leaf gives a parking function",
                 "definition fails");
    images.insert(pi.values);
    const auto back = arborescence_from_parking(pi, dual);
    check.expect(back.A == leaf.A && back.S == leaf.S, "parking bijection round trip", "leaf not recovered");
  }
  check.expect(images.size() == leaves.size(), "parking map injective", "two leaves share a parking function");
  for (const auto& pi : functions) {
    const auto leaf = arborescence_from_parking(pi, dual);
    check.expect(parking_from_leaf(dual, leaf.A, leaf.S) == pi, "parking bijection round trip",
                 "parking function not recovered");
  }
  check.expect(from_leaves == out.p, "leaf enumerator equals p", from_leaves.to_string() + " vs " + out.p.to_string());

  out.top_tree = top_via_tree(tree, n, s);
  out.top_h = top_via_h(out.h, n, s);
  out.top_p = top_via_p(out.p, n, s);
  check.expect(out.top_tree == out.top_h, "top via tree equals top via h",
               out.top_tree.poly.to_string() + " vs " + out.top_h.poly.to_string());
  check.expect(out.top_tree == out.top_p, "top via tree equals top via p",
               out.top_tree.poly.to_string() + " vs " + out.top_p.poly.to_string());
  if (report.top_oracle) {
    check.expect(out.top_tree == *report.top_oracle, "top equals oracle slice",
                 out.top_tree.poly.to_string() + " vs " + report.top_oracle->poly.to_string());
  }

  if (options.audit_type_two) {
    for (const auto& leaf : blocked) {
      const LinkDiagram d = median_diagram(g, node_subgraph(tree.nodes[leaf.node]));
      if (d.num_crossings() > oracle.cap()) continue;
      const auto audit = morton_audit(d, oracle, true);
      ++out.strict_morton_checks;
      check.expect(audit.holds(), "strict Morton bound on type-II leaf",
                   "maxdeg_z " + std::to_string(audit.maxdeg_z.value_or(0)) + " > " + std::to_string(audit.bound));
    }
  }
  report.choices.push_back(std::move(out));
}

}  // namespace

VerifyReport verify_graph(const PlaneBipartiteGraph& g, const VerifyOptions& options) {
  VerifyReport report;
  report.edges = g.num_edges();
  report.vertices = g.num_vertices();
  HomflyOracle oracle(options.crossing_cap);
  const LinkDiagram median = median_diagram(g);
  Checker global(report, std::nullopt);
  global.expect(median.seifert_count() == g.num_vertices(), "Seifert circles equal vertices",
                std::to_string(median.seifert_count()));
  if (median.num_crossings() <= options.crossing_cap) {
    report.homfly = oracle(median);
    report.top_oracle = top_coefficient(*report.homfly, g.num_edges(), g.num_vertices());
    const auto audit = morton_audit(median, oracle, false);
    ++report.morton_checks;
    global.expect(audit.holds(), "Morton bound", "maxdeg_z above n - s + 1");
  }

  std::vector<RootChoice> choices;
  if (options.only) {
    choices.push_back(*options.only);
  } else {
    choices = admissible_roots(g);
    std::sort(choices.begin(), choices.end(),
              [](const RootChoice& a, const RootChoice& b) { return std::tie(a.root, a.kappa) < std::tie(b.root, b.kappa); });
  }
  for (const auto& choice : choices) {
    try {
      check_choice(g, choice, options, oracle, report);
    } catch (const InvariantViolation& err) {
      report.failures.push_back({err.invariant(), err.what(), choice});
    }
  }
  for (std::size_t i = 1; i < report.choices.size(); ++i) {
    const auto& a = report.choices.front();
    const auto& b = report.choices[i];
    global.expect(a.h == b.h, "h independent of root choice",
                  choice_text(a.choice) + " " + a.h.to_string() + " vs " + choice_text(b.choice) + " " + b.h.to_string());
    global.expect(a.p == b.p, "p independent of root choice",
                  choice_text(a.choice) + " " + a.p.to_string() + " vs " + choice_text(b.choice) + " " + b.p.to_string());
  }
  return report;
}

}  // namespace homflytop::cli
