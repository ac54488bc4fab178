// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "homflytop/arborescence.hpp"
#include "homflytop/blocks.hpp"
#include "homflytop/generate.hpp"
#include "homflytop/homfly.hpp"
#include "homflytop/io.hpp"
#include "homflytop/parking.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"
#include "homflytop/root_polytope.hpp"
#include "homflytop/tutte.hpp"

using namespace homflytop;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kCorpusSize = 250;
constexpr int kMaxEdges = 8;

/// Collects failure messages, keeping the first few for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what());
  }
  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream os;
    os << failures_ << " of " << checks_ << " checks failed";
    for (const auto& m : messages_) os << "\n      " << m;
    return os.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> messages_;
};

std::string label(const PlaneBipartiteGraph& g, std::optional<RootChoice> choice = std::nullopt) {
  return graph_document_json(g, choice);
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int index, const std::string& name, const std::function<Outcome()>& body, double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    outcome.pass = false;
    outcome.detail += "; over the time limit";
  }
  if (!outcome.pass) ++failures;
  std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << index << "/8] " << name << ": " << outcome.detail << " ("
            << std::fixed << std::setprecision(3) << seconds << " s)" << std::endl;
}

const std::vector<PlaneBipartiteGraph>& corpus() {
  static const auto graphs = generate_corpus(kSeed, kCorpusSize, kMaxEdges);
  return graphs;
}

Outcome k32_polynomials() {
  const auto doc = load_graph_document(std::string(HOMFLYTOP_DATA_DIR) + "/k32.json");
  HomflyOracle oracle;
  const auto d = median_diagram(doc.graph);
  const auto p = oracle(d);
  const auto expected = Laurent2::parse("v^2*z^2 + 2*v^4*z^2 + 3*v^4 - 3*v^6 + v^4*z^-2 - 2*v^6*z^-2 + v^8*z^-2");
  const auto top = top_coefficient(p, d.num_crossings(), d.seifert_count());
  const auto ca = conway_alexander(p);
  Tally t;
  t.check(p == expected, [&] { return "P = " + p.to_string(); });
  t.check(top.poly == Laurent1::parse("v^2 + 2*v^4", "v") && top.z_exponent == 2,
          [&] { return "top = " + top.poly.to_string(); });
  t.check(ca.conway == Laurent1::parse("3*z^2", "z"), [&] { return "conway = " + ca.conway.to_string(); });
  t.check(ca.alexander && *ca.alexander == Laurent1::parse("3*t - 6 + 3*t^-1", "t"),
          [&] { return "alexander = " + half_integer_to_string(ca.alexander_half); });
  if (!t.ok()) return {false, t.summary()};
  return {true, "P = " + p.to_string() + "; top = " + top.poly.to_string() + "; conway = " + ca.conway.to_string() +
                    "; alexander = " + ca.alexander->to_string()};
}

Outcome k32_tree_data() {
  const auto doc = load_graph_document(std::string(HOMFLYTOP_DATA_DIR) + "/k32.json");
  const auto& g = doc.graph;
  const auto choice = doc.root_choice();
  const auto dual = build_dual(g, choice.root, choice.kappa);
  const auto tree = build_arb_tree(dual);
  const auto tri = triangulation_from_arbtree(tree, g);
  const auto p = parking_enumerator(enumerate_parking(as_rooted_digraph(dual)));
  std::multiset<int> k;
  for (const auto& leaf : tree.type_one_leaves()) k.insert(leaf.k());
  std::vector<int> c;
  for (const auto& s : tri.simplices) c.push_back(s.attach_count);
  const auto hyper = hypertrees(g).size();
  Tally t;
  t.check(tree.type_one_leaves().size() == 3, [&] { return "type-I leaves " + std::to_string(tree.type_one_leaves().size()); });
  t.check(k == std::multiset<int>{0, 1, 1}, [] { return "skipped-count multiset differs"; });
  t.check(c == std::vector<int>{0, 1, 1}, [] { return "attach counts differ"; });
  t.check(tri.h == Laurent1::parse("x^4 + 2*x^3", "x"), [&] { return "h = " + tri.h.to_string(); });
  t.check(p == Laurent1::parse("1 + 2*u", "u"), [&] { return "p = " + p.to_string(); });
  t.check(hyper == 3 && tri.simplices.size() == 3, [&] { return "hypertrees " + std::to_string(hyper); });
  if (!t.ok()) return {false, t.summary()};
  const auto type_two = tree.type_two_leaves().size();
  std::cout << (type_two == 3 ? "SOFT-PASS" : "SOFT-FLAG") << " [2/8] type-II leaf count: " << type_two
            << " (expected 3)" << std::endl;
  return {true, "3 type-I leaves, k = {0,1,1}, c = [0,1,1], h = " + tri.h.to_string() + ", p = " + p.to_string() +
                    ", 3 hypertrees = 3 simplices"};
}

Outcome identity_suite() {
  HomflyOracle oracle;
  Tally t;
  long choices = 0;
  for (const auto& g : corpus()) {
    const int n = g.num_edges();
    const int s = g.num_vertices();
    const auto oracle_top = top_coefficient(oracle(median_diagram(g)), n, s);
    std::optional<Laurent1> h0;
    std::optional<Laurent1> p0;
    for (const auto& choice : admissible_roots(g)) {
      ++choices;
      const auto dual = build_dual(g, choice.root, choice.kappa);
      const auto tree = build_arb_tree(dual);
      const auto tri = triangulation_from_arbtree(tree, g);
      const auto p = parking_enumerator(enumerate_parking(as_rooted_digraph(dual)));
      const auto by_tree = top_via_tree(tree, n, s);
      const auto by_h = top_via_h(tri.h, n, s);
      const auto by_p = top_via_p(p, n, s);
      t.check(by_tree == oracle_top && by_h == oracle_top && by_p == oracle_top,
              [&] { return "tops disagree on " + label(g, choice); });
      if (!h0) h0 = tri.h;
      if (!p0) p0 = p;
      t.check(tri.h == *h0, [&] { return "h depends on the root choice: " + label(g, choice); });
      t.check(p == *p0, [&] { return "p depends on the root choice: " + label(g, choice); });
    }
  }
  if (!t.ok()) return {false, t.summary()};
  return {true, std::to_string(corpus().size()) + " graphs, " + std::to_string(choices) +
                    " root choices; tree = h = p = oracle slice; h and p root-independent"};
}

Outcome bijection_suite() {
  Tally t;
  long leaves_total = 0;
  for (const auto& g : corpus()) {
    for (const auto& choice : admissible_roots(g)) {
      const auto dual = build_dual(g, choice.root, choice.kappa);
      const auto rooted = as_rooted_digraph(dual);
      const auto functions = enumerate_parking(rooted);
      const auto leaves = build_arb_tree(dual).type_one_leaves();
      const auto brute = spanning_arborescences_bruteforce(dual);
      leaves_total += static_cast<long>(leaves.size());
      t.check(leaves.size() == functions.size() && functions.size() == brute.size(),
              [&] { return "counts differ on " + label(g, choice); });
      for (const auto& leaf : leaves) {
        const auto pi = parking_from_leaf(dual, leaf.A, leaf.S);
        const auto back = arborescence_from_parking(pi, dual);
        t.check(back.A == leaf.A && back.S == leaf.S, [&] { return "leaf round trip fails on " + label(g, choice); });
      }
      for (const auto& pi : functions) {
        const auto leaf = arborescence_from_parking(pi, dual);
        t.check(parking_from_leaf(dual, leaf.A, leaf.S) == pi,
                [&] { return "parking round trip fails on " + label(g, choice); });
      }
    }
  }
  if (!t.ok()) return {false, t.summary()};
  return {true, std::to_string(leaves_total) + " type-I leaves; both round trips are identities; " +
                    "|leaves| = |parking| = |brute-force arborescences| everywhere"};
}

Outcome triangulation_suite() {
  Tally t;
  long pairs = 0;
  long subsets = 0;
  for (const auto& g : corpus()) {
    const int n = g.num_edges();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      EdgeSet edges(n);
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) edges.insert(i);
      }
      ++subsets;
      t.check(affine_independence_check(g, edges).agree(), [&] { return "rank disagrees on " + label(g); });
    }
    for (const auto& choice : admissible_roots(g)) {
      const auto tri = triangulation_from_arbtree(build_arb_tree(build_dual(g, choice.root, choice.kappa)), g);
      std::vector<int> counts;
      for (const auto& s : tri.simplices) counts.push_back(s.attach_count);
      for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
        for (std::size_t j = i + 1; j < tri.simplices.size(); ++j) {
          ++pairs;
          t.check(compatible(g, tri.simplices[i].edges, tri.simplices[j].edges),
                  [&] { return "incompatible simplices on " + label(g, choice); });
        }
      }
      t.check(h_from_f(tri.f) == h_from_shelling(counts, tri.dimension),
              [&] { return "h mismatch on " + label(g, choice); });
    }
  }
  if (!t.ok()) return {false, t.summary()};
  return {true, std::to_string(pairs) + " simplex pairs compatible; rank = cycle test on " + std::to_string(subsets) +
                    " edge subsets; h(f) = h(shelling) everywhere"};
}

Outcome morton_suite() {
  HomflyOracle oracle;
  Tally t;
  long loose = 0;
  long strict = 0;
  auto audit = [&](const LinkDiagram& d, bool alternating_contour, const std::string& where) {
    const auto plain = morton_audit(d, oracle, false);
    ++loose;
    t.check(plain.holds(), [&] { return "Morton bound fails: " + where; });
    if (alternating_contour) {
      const auto sharp = morton_audit(d, oracle, true);
      ++strict;
      t.check(sharp.holds(), [&] { return "strict bound fails: " + where; });
    }
  };
  for (const auto& g : corpus()) {
    const auto full = EdgeSet::full(g.num_edges());
    audit(median_diagram(g), false, label(g));
    audit(median_diagram(g, {full, full}), false, label(g));
    for (const auto& choice : admissible_roots(g)) {
      const auto tree = build_arb_tree(build_dual(g, choice.root, choice.kappa));
      for (const auto& leaf : tree.type_two_leaves()) {
        audit(median_diagram(g, node_subgraph(tree.nodes[leaf.node])), true, label(g, choice));
      }
    }
  }
  if (!t.ok()) return {false, t.summary()};
  return {true, std::to_string(loose) + " diagrams within n-s+1; " + std::to_string(strict) +
                    " type-II leaf diagrams within n-s-1"};
}

Outcome tutte_suite() {
  Tally t;
  const auto graphs = connected_multigraphs(6);
  for (const auto& k : graphs) {
    const auto cmp = doubled_graph_crosscheck(k);
    t.check(cmp.agree(), [&] { return "doubled identity fails: " + cmp.parking.to_string() + " vs " + cmp.tutte_side.to_string(); });
  }
  long subdivided = 0;
  for (const auto& g : corpus()) {
    if (!contracted_graph(g)) continue;
    ++subdivided;
    for (int f = 0; f < g.num_faces(); ++f) {
      t.check(dual_crosscheck(g, f).agree(), [&] { return "dual identity fails on " + label(g); });
    }
  }
  const auto k32 = k32_graph();
  const auto theta = contracted_graph(k32);
  t.check(theta && tutte(*theta) == Laurent2::parse("x + y + y^2", "x", "y"), [] { return "K* of K_{3,2} is not theta"; });
  const auto cmp = dual_crosscheck(k32, 1);
  t.check(cmp.agree() && cmp.parking == Laurent1::parse("1 + 2*u", "u"), [&] { return "K_{3,2}: " + cmp.parking.to_string(); });
  if (!t.ok()) return {false, t.summary()};
  return {true, std::to_string(graphs.size()) + " connected multigraphs (<= 6 edges) under doubling; " +
                    std::to_string(subdivided) + " subdivided corpus graphs plus K_{3,2} (1 + 2*u)"};
}

struct BlockSpec {
  std::string name;
  PlaneBipartiteGraph graph;
};

Outcome mirror_and_products() {
  HomflyOracle oracle;
  Tally t;
  long mirrors = 0;
  std::vector<PlaneBipartiteGraph> graphs(corpus().begin(), corpus().end());
  graphs.push_back(k32_graph());
  graphs.push_back(banded_theta_graph(2));
  graphs.push_back(banded_theta_graph(3));
  for (const auto& g : graphs) {
    const auto full = EdgeSet::full(g.num_edges());
    const auto solid = oracle(median_diagram(g));
    const auto dotted = oracle(median_diagram(g, {full, full}));
    ++mirrors;
    t.check(dotted == solid.mirrored(), [&] { return "mirror rule fails on " + label(g); });
  }

  const std::vector<BlockSpec> pieces{{"C2", banded_theta_graph(2)}, {"theta", banded_theta_graph(3)}};
  long sums = 0;
  auto check_sum = [&](const PlaneBipartiteGraph& g, const std::vector<int>& block_of_edge, int blocks_used,
                       const std::string& name) {
    for (unsigned mask = 0; mask < (1u << blocks_used); ++mask) {
      std::vector<Sign> signs;
      for (int b : block_of_edge) signs.push_back((mask >> b) & 1 ? Sign::Negative : Sign::Positive);
      const auto blocks = biconnected_blocks(g, signs);
      const auto product = homogeneous_top(blocks, block_enumerators(g, blocks));
      const auto d = median_diagram(g, signed_subgraph(g, signs));
      const auto slice = oracle(d).slice2(d.num_crossings() - d.seifert_count() + 1);
      ++sums;
      t.check(product == slice, [&] { return name + ": product " + product.to_string() + " vs oracle " + slice.to_string(); });
    }
  };
  auto edges_tagged = [](int count, int tag, std::vector<int> tags) {
    tags.insert(tags.end(), count, tag);
    return tags;
  };
  for (const auto& a : pieces) {
    for (const auto& b : pieces) {
      for (int shared = 0; shared < 2; ++shared) {
        const auto g = one_point_union(a.graph, shared, b.graph, shared);
        const auto tags = edges_tagged(b.graph.num_edges(), 1, edges_tagged(a.graph.num_edges(), 0, {}));
        check_sum(g, tags, 2, a.name + "+" + b.name);
        for (const auto& c : pieces) {
          if (g.num_edges() + c.graph.num_edges() > 8) continue;
          for (int at = 0; at < g.num_vertices(); ++at) {
            const int partner = g.vertex(at).color == Color::E ? 0 : 1;
            const auto h = one_point_union(g, at, c.graph, partner);
            check_sum(h, edges_tagged(c.graph.num_edges(), 2, tags), 3, a.name + "+" + b.name + "+" + c.name);
          }
        }
      }
    }
  }
  if (!t.ok()) return {false, t.summary()};
  return {true, std::to_string(mirrors) + " mirror pairs related by v -> -1/v; " + std::to_string(sums) +
                    " signed block sums of C2/theta (<= 8 crossings): product formula = oracle slice"};
}

}  // namespace

int main() {
  report(1, "K_{3,2} HOMFLY, top, Conway and Alexander", k32_polynomials, 1.0);
  report(2, "K_{3,2} tree, shelling, h, p and hypertrees", k32_tree_data);
  report(3, "three tops against the skein oracle on the corpus", identity_suite, 300.0);
  report(4, "parking bijection on the corpus", bijection_suite);
  report(5, "triangulation compatibility, affine rank and h", triangulation_suite);
  report(6, "Morton bounds", morton_suite);
  report(7, "Tutte cross-checks", tutte_suite);
  report(8, "mirror rule and block-sum products", mirror_and_products);
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
