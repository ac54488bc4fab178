#include <benchmark/benchmark.h>

#include "homflytop/generate.hpp"
#include "verify.hpp"

using namespace homflytop;
using homflytop::cli::verify_graph;

namespace {

void BM_VerifyK32(benchmark::State& state) {
  const auto g = k32_graph();
  for (auto _ : state) benchmark::DoNotOptimize(verify_graph(g));
}
BENCHMARK(BM_VerifyK32);

void BM_VerifyCorpus(benchmark::State& state) {
  const auto corpus = generate_corpus(20240601, 50, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& g : corpus) benchmark::DoNotOptimize(verify_graph(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_VerifyCorpus)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
