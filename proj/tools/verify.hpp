#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homflytop/homfly.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"

namespace homflytop::cli {

struct VerifyOptions {
  int crossing_cap = 14;
  /// Restrict to one root choice; otherwise every admissible one is checked.
  std::optional<RootChoice> only;
  /// Run the strict Morton audit on the median of every type-II leaf.
  bool audit_type_two = true;
};

struct CheckFailure {
  std::string invariant;
  std::string detail;
  std::optional<RootChoice> choice;
};

struct ChoiceReport {
  RootChoice choice{0, 0};
  int type_one = 0;
  int type_two = 0;
  std::vector<int> skipped_counts;  // right to left
  std::vector<int> attach_counts;
  Laurent1 f{"y"};
  Laurent1 h{"x"};
  Laurent1 p{"u"};
  TopPolynomial top_tree;
  TopPolynomial top_h;
  TopPolynomial top_p;
  int strict_morton_checks = 0;
};

struct VerifyReport {
  int edges = 0;
  int vertices = 0;
  std::optional<Laurent2> homfly;  // empty when above the crossing cap
  std::optional<TopPolynomial> top_oracle;
  std::vector<ChoiceReport> choices;
  std::vector<CheckFailure> failures;
  int morton_checks = 0;
  bool ok() const { return failures.empty(); }
};

/// Runs every consistency check on g for each admissible (r0, kappa):
/// the tree of arborescences against brute force, the triangulation and its
/// shelling, both h computations, the parking bijection, the three tops and
/// the oracle's top slice, and Morton's bounds.
VerifyReport verify_graph(const PlaneBipartiteGraph& g, const VerifyOptions& options = {});

}  // namespace homflytop::cli
