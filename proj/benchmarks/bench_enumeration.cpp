#include <benchmark/benchmark.h>

#include "fourcalc/constructions/presentations.hpp"
#include "fourcalc/fpgroup/coset_enumeration.hpp"
#include "fourcalc/fpgroup/presentation.hpp"
#include "fourcalc/fpgroup/triviality.hpp"

using namespace fourcalc;

static void BM_EnumerateXn(benchmark::State& state) {
  const auto p = constructions::xn_certificate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fpgroup::coset_enumerate(p, {}));
}
BENCHMARK(BM_EnumerateXn)->Arg(1)->Arg(5)->Arg(25)->Arg(100)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateYn(benchmark::State& state) {
  const auto p = constructions::yn_certificate(static_cast<int>(state.range(0)));
  fpgroup::EnumerationConfig cfg;
  cfg.strategy = state.range(1) == 0 ? fpgroup::Strategy::kHlt : fpgroup::Strategy::kFelsch;
  for (auto _ : state) benchmark::DoNotOptimize(fpgroup::coset_enumerate(p, {}, cfg));
  state.SetLabel(std::string(fpgroup::to_string(cfg.strategy)));
}
BENCHMARK(BM_EnumerateYn)->ArgsProduct({{1, 5, 25}, {0, 1}})->Unit(benchmark::kMicrosecond);

static void BM_EnumerateA5(benchmark::State& state) {
  const auto p = fpgroup::parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^5");
  fpgroup::EnumerationConfig cfg;
  cfg.strategy = state.range(0) == 0 ? fpgroup::Strategy::kHlt : fpgroup::Strategy::kFelsch;
  for (auto _ : state) benchmark::DoNotOptimize(fpgroup::coset_enumerate(p, {}, cfg));
}
BENCHMARK(BM_EnumerateA5)->Arg(0)->Arg(1);

static void BM_IsTrivialXn(benchmark::State& state) {
  const auto p = constructions::xn_certificate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fpgroup::is_trivial(p));
}
BENCHMARK(BM_IsTrivialXn)->Arg(3)->Unit(benchmark::kMicrosecond);
