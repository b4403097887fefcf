#pragma once

// Random consecutive-ones rows and vectors for the OMv suites.

#include <random>

#include "dic/omv_c1.hpp"

namespace dic::test {

// One in eight is all zero; otherwise a uniformly placed block of 1s.
inline omv::BitVector random_c1(std::mt19937_64& rng, std::size_t n) {
  omv::BitVector v(n, 0);
  if (rng() % 8 == 0) return v;
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  std::size_t a = pos(rng);
  std::size_t b = pos(rng);
  if (a > b) std::swap(a, b);
  for (std::size_t i = a; i <= b; ++i) v[i] = 1;
  return v;
}

inline omv::DenseMatrix random_c1_matrix(std::mt19937_64& rng, std::size_t n) {
  omv::DenseMatrix m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.push_back(random_c1(rng, n));
  return m;
}

}  // namespace dic::test
