#include <benchmark/benchmark.h>

#include "plumb/gs.hpp"
#include "plumb/moves.hpp"
#include "plumb/open_book.hpp"
#include "plumb/torus.hpp"

using namespace plumb;

namespace {

// Repeats b^-2 a^-1, whose square is -I, so the entries stay bounded at any length.
Word periodic_word(std::size_t length) {
  Word w(length, Letter::BInv);
  for (std::size_t i = 2; i < length; i += 3) w[i] = Letter::AInv;
  return w;
}

std::vector<std::int64_t> cycle_of(std::size_t length) {
  std::vector<std::int64_t> s(length, 0);
  s[0] = 3;
  return s;
}

void BM_Rotation(benchmark::State& state) {
  const auto w = periodic_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rotation(w).at_least(2));
}
BENCHMARK(BM_Rotation)->Arg(8)->Arg(64)->Arg(512);

void BM_CheckGS(benchmark::State& state) {
  const auto g = make_cycle(cycle_of(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_gs(g, GSMode::Concave));
}
BENCHMARK(BM_CheckGS)->Arg(4)->Arg(8)->Arg(16);

void BM_OpenBook(benchmark::State& state) {
  const auto g = make_cycle(cycle_of(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_open_book(g, Side::Concave));
}
BENCHMARK(BM_OpenBook)->Arg(4)->Arg(16);

void BM_ClassifyTightness(benchmark::State& state) {
  const auto s = cycle_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_tightness(s));
}
BENCHMARK(BM_ClassifyTightness)->Arg(3)->Arg(6)->Arg(12);

void BM_MinimalModels(benchmark::State& state) {
  auto g = make_cycle({0, 0});
  for (int k = 0; k < state.range(0); ++k) g = toric_blowup(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_models(g));
}
BENCHMARK(BM_MinimalModels)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
