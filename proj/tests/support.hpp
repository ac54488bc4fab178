#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homflytop/generate.hpp"
#include "homflytop/plane_graph.hpp"
#include "homflytop/poly.hpp"

namespace homflytop::testing {

inline constexpr std::uint64_t kCorpusSeed = 20240601;
inline constexpr int kCorpusSize = 250;
inline constexpr int kCorpusMaxEdges = 8;

inline std::string data_path(const std::string& name) { return std::string(HOMFLYTOP_DATA_DIR) + "/" + name; }

inline const std::vector<PlaneBipartiteGraph>& corpus() {
  static const auto graphs = generate_corpus(kCorpusSeed, kCorpusSize, kCorpusMaxEdges);
  return graphs;
}

inline Laurent1 poly1(const std::string& text, const std::string& var) { return Laurent1::parse(text, var); }
inline Laurent2 poly2(const std::string& text) { return Laurent2::parse(text); }

/// K_{3,2} dual rooted at the outer face with kappa = 0.
inline DualDigraph k32_dual() {
  const auto g = k32_graph();
  return build_dual(g, g.face_of(dart_v_to_e(0)), 0);
}

inline DualDigraph outer_dual(const PlaneBipartiteGraph& g) {
  return build_dual(g, g.face_of(dart_v_to_e(0)), 0);
}

}  // namespace homflytop::testing
