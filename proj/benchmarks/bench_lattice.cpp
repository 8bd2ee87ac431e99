#include <benchmark/benchmark.h>

#include <random>

#include "fourcalc/constructions/blocks.hpp"
#include "fourcalc/lattice/smith.hpp"
#include "fourcalc/sw/adjunction.hpp"
#include "fourcalc/sw/invariants.hpp"

using namespace fourcalc;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  lattice::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6);

static void BM_SmithInvariants(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  lattice::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->Arg(8)->Arg(12);

static void BM_BasicCandidates(benchmark::State& state) {
  const auto& id = constructions::block_ids()[static_cast<std::size_t>(state.range(0))];
  const auto b = constructions::build_block(id);
  const auto cfg = b.adjunction_config();
  for (auto _ : state) benchmark::DoNotOptimize(sw::enumerate_basic_candidates(cfg, *b.lattice));
  state.SetLabel(id);
}
BENCHMARK(BM_BasicCandidates)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void BM_Blowup(benchmark::State& state) {
  const auto b = constructions::build_block("U");
  const auto cands = sw::enumerate_basic_candidates(b.adjunction_config(), *b.lattice);
  const sw::SWState s(b.lattice, 1, {{cands[0], 1}, {cands[1], -1}});
  for (auto _ : state) benchmark::DoNotOptimize(sw::blowup_sw(s, state.range(0)));
}
BENCHMARK(BM_Blowup)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);
