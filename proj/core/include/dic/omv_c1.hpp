#pragma once

// Online boolean matrix-vector multiplication for consecutive-ones inputs.
//
// Each matrix row whose 1s are contiguous is the column interval [l, r];
// a query vector with contiguous 1s is the interval [p, q].  Row i of the
// product is 1 exactly when the two intervals intersect, so one
// intersection query over an interval index of the rows answers a whole
// product.  Column indices are 0-based; an all-zero row or vector is an
// empty interval and contributes only 0s.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dic/interval_index.hpp"
#include "dic/types.hpp"

namespace dic::omv {

using BitVector = std::vector<std::uint8_t>;
using DenseMatrix = std::vector<BitVector>;

struct OnesSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const OnesSpan&, const OnesSpan&) = default;
};

/// The span of 1s in `bits`, or nullopt when all zero.  `what` names the
/// row or vector in the NotConsecutiveOnes message.
std::optional<OnesSpan> ones_span(std::span<const std::uint8_t> bits, std::string_view what);

struct C1Vector {
  std::size_t n = 0;
  std::optional<OnesSpan> ones;

  static C1Vector from_dense(std::span<const std::uint8_t> bits);
};

struct C1Matrix {
  std::size_t n = 0;
  std::vector<std::optional<OnesSpan>> rows;

  /// Throws DimensionMismatch for a non-square matrix and
  /// NotConsecutiveOnes naming the first offending row.
  static C1Matrix from_dense(const DenseMatrix& dense);
};

class C1Index {
 public:
  static C1Index preprocess(const C1Matrix& m);

  [[nodiscard]] std::size_t dimension() const { return n_; }

  /// Throws DimensionMismatch when v.n differs from the matrix dimension.
  [[nodiscard]] BitVector multiply(const C1Vector& v) const;

  /// Converts a dense query first; throws NotConsecutiveOnes or DimensionMismatch.
  [[nodiscard]] BitVector multiply(std::span<const std::uint8_t> dense) const;

 private:
  struct RowInterval {
    IntervalId id;
    Coord lo;
    Coord hi;
  };

  std::size_t n_ = 0;
  IntervalIndex<RowInterval> rows_;
};

/// Plain AND/OR product touching every matrix entry.
BitVector naive_multiply(const DenseMatrix& m, std::span<const std::uint8_t> v);

/// Matrix file: a line holding n, then n lines of n characters from {0,1}.
DenseMatrix read_matrix(std::istream& in);

/// One query line of exactly n characters from {0,1}.
BitVector parse_bits(std::string_view line, std::size_t n);

std::string format_bits(std::span<const std::uint8_t> bits);

}  // namespace dic::omv
