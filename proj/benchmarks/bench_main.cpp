#include <benchmark/benchmark.h>

#include "ttl/ttl.hpp"

namespace {

void BM_ClosureTorus(benchmark::State& state) {
  const auto p = state.range(0);
  const ttl::BraidWord word = ttl::torus_braid(p, p / 2 * 2 + 2);
  for (auto _ : state) benchmark::DoNotOptimize(ttl::closure_analysis(word));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(word.size()));
}
BENCHMARK(BM_ClosureTorus)->RangeMultiplier(2)->Range(8, 256);

void BM_ClosureTwisted(benchmark::State& state) {
  const auto p = state.range(0);
  const ttl::BraidWord word = ttl::twisted_torus_braid(ttl::new_params(p, 2, p - 1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(ttl::closure_analysis(word));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(word.size()));
}
BENCHMARK(BM_ClosureTwisted)->RangeMultiplier(2)->Range(8, 128);

// The census grid for p, q <= 30.
void BM_ClassifyGrid(benchmark::State& state) {
  for (auto _ : state) {
    int hyperbolic = 0;
    for (ttl::Int p = 2; p <= 30; ++p) {
      for (ttl::Int q = 2; q <= p; ++q) {
        for (ttl::Int r = 2; r <= p + q; ++r) {
          hyperbolic += std::holds_alternative<ttl::verdict::Hyperbolic>(
              ttl::classify(ttl::new_params(p, q, r, 4)));
        }
      }
    }
    benchmark::DoNotOptimize(hyperbolic);
  }
}
BENCHMARK(BM_ClassifyGrid);

void BM_ExportPd(benchmark::State& state) {
  const ttl::BraidWord word = ttl::twisted_torus_braid(ttl::new_params(state.range(0), 6, 5, 4));
  for (auto _ : state) benchmark::DoNotOptimize(ttl::export_code(word, ttl::DiagramFormat::Pd));
}
BENCHMARK(BM_ExportPd)->Arg(8)->Arg(32)->Arg(128);

void BM_BraidWordRoundTrip(benchmark::State& state) {
  const std::string text =
      ttl::export_code(ttl::torus_braid(state.range(0), 7), ttl::DiagramFormat::BraidWord);
  for (auto _ : state) benchmark::DoNotOptimize(ttl::parse_braid_word(text));
}
BENCHMARK(BM_BraidWordRoundTrip)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
