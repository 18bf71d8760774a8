#include <benchmark/benchmark.h>

#include "zinbiel/bimodule.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/coalgebra.hpp"
#include "zinbiel/identity.hpp"
#include "zinbiel/matched_pair.hpp"
#include "zinbiel/models.hpp"

using namespace zinbiel;

static void BM_RightLawEngine(benchmark::State& state) {
  const auto a = trunc_integration(static_cast<std::size_t>(state.range(0)), Orientation::Right);
  const Identity& law = catalog_identity("right_zinbiel");
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(a, law, workers));
}
BENCHMARK(BM_RightLawEngine)->ArgsProduct({{4, 8, 16}, {1, 2, 4}});

static void BM_RightLawDirect(benchmark::State& state) {
  const auto a = trunc_integration(static_cast<std::size_t>(state.range(0)), Orientation::Right);
  for (auto _ : state) benchmark::DoNotOptimize(find_right_zinbiel_violation(a));
}
BENCHMARK(BM_RightLawDirect)->Arg(4)->Arg(8)->Arg(16);

static void BM_LieAdmissible(benchmark::State& state) {
  const auto a = trunc_integration(static_cast<std::size_t>(state.range(0)), Orientation::Right);
  const Identity& law = catalog_identity("lie_admissible");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(a, law));
}
BENCHMARK(BM_LieAdmissible)->Arg(5)->Arg(8);

static void BM_FreeModel(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_halfshuffle(2, m));
}
BENCHMARK(BM_FreeModel)->Arg(3)->Arg(4)->Arg(5);

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Scalar(1, static_cast<long>(i + j + 1)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

static void BM_CoRight(benchmark::State& state) {
  const auto c = dualize(trunc_integration(static_cast<std::size_t>(state.range(0)), Orientation::Right));
  for (auto _ : state) benchmark::DoNotOptimize(check_co_right(c));
}
BENCHMARK(BM_CoRight)->Arg(4)->Arg(8);

static void BM_BimoduleAxioms(benchmark::State& state) {
  const auto b = regular_bimodule(trunc_integration(static_cast<std::size_t>(state.range(0)), Orientation::Right));
  for (auto _ : state) benchmark::DoNotOptimize(check_bimodule(b));
}
BENCHMARK(BM_BimoduleAxioms)->Arg(4)->Arg(8);

static void BM_MatchedPair(benchmark::State& state) {
  const auto mp = from_bimodule(regular_bimodule(trunc_integration(static_cast<std::size_t>(state.range(0)), Orientation::Right)));
  for (auto _ : state) benchmark::DoNotOptimize(check_matched_pair(mp));
}
BENCHMARK(BM_MatchedPair)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
