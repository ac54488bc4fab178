#include <benchmark/benchmark.h>

#include <random>

#include "homflytop/arborescence.hpp"
#include "homflytop/generate.hpp"
#include "homflytop/homfly.hpp"
#include "homflytop/parking.hpp"
#include "homflytop/root_polytope.hpp"

using namespace homflytop;

namespace {

PlaneBipartiteGraph sample_graph(int edges) {
  std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(edges));
  return random_plane_bipartite_graph(rng, edges);
}

DualDigraph sample_dual(const PlaneBipartiteGraph& g) {
  const auto choice = admissible_roots(g).front();
  return build_dual(g, choice.root, choice.kappa);
}

void BM_ArbTree(benchmark::State& state) {
  const auto g = sample_graph(static_cast<int>(state.range(0)));
  const auto dual = sample_dual(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_arb_tree(dual));
  state.counters["faces"] = g.num_faces();
}
BENCHMARK(BM_ArbTree)->DenseRange(4, 14, 2);

void BM_ParkingEnumeration(benchmark::State& state) {
  const auto g = sample_graph(static_cast<int>(state.range(0)));
  const auto d = as_rooted_digraph(sample_dual(g));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_parking(d));
}
BENCHMARK(BM_ParkingEnumeration)->DenseRange(4, 14, 2);

void BM_Hypertrees(benchmark::State& state) {
  const auto g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hypertrees(g));
}
BENCHMARK(BM_Hypertrees)->DenseRange(4, 12, 2);

void BM_Triangulation(benchmark::State& state) {
  const auto g = sample_graph(static_cast<int>(state.range(0)));
  const auto tree = build_arb_tree(sample_dual(g));
  for (auto _ : state) benchmark::DoNotOptimize(triangulation_from_arbtree(tree, g));
}
BENCHMARK(BM_Triangulation)->DenseRange(4, 12, 2);

void BM_SkeinK32(benchmark::State& state) {
  const auto d = median_diagram(k32_graph());
  for (auto _ : state) benchmark::DoNotOptimize(homfly_skein(d));
}
BENCHMARK(BM_SkeinK32);

void BM_SkeinTorus(benchmark::State& state) {
  const auto d = median_diagram(banded_theta_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homfly_skein(d));
}
BENCHMARK(BM_SkeinTorus)->DenseRange(2, 9, 1);

}  // namespace

BENCHMARK_MAIN();
