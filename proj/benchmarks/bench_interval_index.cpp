#include <benchmark/benchmark.h>

#include <random>

#include "dic/interval_index.hpp"
#include "dic/types.hpp"

namespace {

using dic::Coord;
using dic::Interval;

dic::IntervalIndex<Interval> random_index(std::size_t n, std::mt19937_64& rng) {
  const auto span = static_cast<Coord>(n * 16);
  std::uniform_int_distribution<Coord> lo(0, span);
  std::uniform_int_distribution<Coord> len(0, 64);
  dic::IntervalIndex<Interval> index;
  for (std::size_t i = 0; i < n; ++i) {
    const Coord a = lo(rng);
    index.insert(Interval{static_cast<dic::IntervalId>(i), a, a + len(rng)});
  }
  return index;
}

void BM_IndexInsert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::mt19937_64 rng(1);
    auto index = random_index(n, rng);
    benchmark::DoNotOptimize(index.height());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndexInsert)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_IndexStab(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto index = random_index(n, rng);
  std::uniform_int_distribution<Coord> point(0, static_cast<Coord>(n * 16));
  for (auto _ : state) {
    const Coord t = point(rng);
    std::size_t hits = 0;
    index.visit_intersecting(t, t, [&](const Interval&) { ++hits; });
    benchmark::DoNotOptimize(hits);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndexStab)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oLogN);

}  // namespace
