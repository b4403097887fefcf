#include <benchmark/benchmark.h>

#include <optional>

#include "dic/coloring_engine.hpp"
#include "dic/trace.hpp"

namespace {

dic::Trace uniform_trace(std::size_t n) {
  // Length-bounded intervals with density independent of n.
  return dic::generate({dic::TraceKind::Uniform, n, 0.0, static_cast<dic::Coord>(n * 8), 64, 7});
}

void insert_all(benchmark::State& state, dic::SlsMode mode) {
  const dic::Trace trace = uniform_trace(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    dic::ColoringEngine engine(mode);
    for (const dic::UpdateEvent& ev : trace) engine.insert(ev.id, ev.lo, ev.hi);
    benchmark::DoNotOptimize(engine.colors_used());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}

void BM_InsertIncremental(benchmark::State& state) { insert_all(state, dic::SlsMode::Incremental); }
void BM_InsertDynamic(benchmark::State& state) { insert_all(state, dic::SlsMode::Dynamic); }
BENCHMARK(BM_InsertIncremental)->RangeMultiplier(2)->Range(1 << 12, 1 << 16)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_InsertDynamic)->RangeMultiplier(2)->Range(1 << 12, 1 << 16)->Complexity(benchmark::oNLogN);

// Mixed updates at a steady live size around n.
void BM_MixedDynamic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dic::Trace trace = dic::generate({dic::TraceKind::Mixed, n, 0.3, static_cast<dic::Coord>(n * 4), 64, 11});
  for (auto _ : state) {
    dic::ColoringEngine engine(dic::SlsMode::Dynamic);
    for (const dic::UpdateEvent& ev : trace) {
      if (ev.op == dic::UpdateEvent::Op::Insert) {
        engine.insert(ev.id, ev.lo, ev.hi);
      } else {
        benchmark::DoNotOptimize(engine.remove(ev.id));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MixedDynamic)->RangeMultiplier(2)->Range(1 << 12, 1 << 15);

// Deleting the lowest interval of a nested clique relevels every other
// interval, the worst case for delete cost.  Endpoint visits grow as n^2;
// wall time grows faster because every endpoint holds a set of n levels.
void BM_NestedDeleteBottom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const dic::Trace trace = dic::generate({dic::TraceKind::Nested, n, 0.0, static_cast<dic::Coord>(n * 4), 0, 3});
  std::optional<dic::ColoringEngine> engine;
  for (auto _ : state) {
    // Building and tearing down the clique is not part of the measurement.
    state.PauseTiming();
    engine.reset();
    engine.emplace(dic::SlsMode::Dynamic);
    for (const dic::UpdateEvent& ev : trace) engine->insert(ev.id, ev.lo, ev.hi);
    const auto visits_before = engine->stats().endpoint_visits;
    state.ResumeTiming();
    benchmark::DoNotOptimize(engine->remove(trace.front().id));
    state.counters["endpoint_visits"] = static_cast<double>(engine->stats().endpoint_visits - visits_before);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NestedDeleteBottom)->RangeMultiplier(2)->Range(1 << 7, 1 << 11)->Complexity();

}  // namespace
