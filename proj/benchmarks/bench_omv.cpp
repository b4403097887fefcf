#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dic/omv_c1.hpp"

namespace {

using dic::omv::BitVector;

BitVector random_block(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  std::size_t a = pos(rng);
  std::size_t b = pos(rng);
  if (a > b) std::swap(a, b);
  BitVector v(n, 0);
  for (std::size_t i = a; i <= b; ++i) v[i] = 1;
  return v;
}

struct Instance {
  dic::omv::DenseMatrix m;
  std::vector<BitVector> queries;
};

Instance make_instance(std::size_t n) {
  std::mt19937_64 rng(n);
  Instance in;
  for (std::size_t i = 0; i < n; ++i) in.m.push_back(random_block(rng, n));
  for (std::size_t i = 0; i < n; ++i) in.queries.push_back(random_block(rng, n));
  return in;
}

// n online queries against one preprocessed matrix.
void BM_OmvIndex(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  const auto index = dic::omv::C1Index::preprocess(dic::omv::C1Matrix::from_dense(in.m));
  for (auto _ : state) {
    for (const BitVector& v : in.queries) benchmark::DoNotOptimize(index.multiply(v));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OmvIndex)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_OmvNaive(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const BitVector& v : in.queries) benchmark::DoNotOptimize(dic::omv::naive_multiply(in.m, v));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OmvNaive)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed);

void BM_OmvPreprocess(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dic::omv::C1Index::preprocess(dic::omv::C1Matrix::from_dense(in.m)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OmvPreprocess)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

}  // namespace
