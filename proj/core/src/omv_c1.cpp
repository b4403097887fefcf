#include "dic/omv_c1.hpp"

#include <istream>
#include <string>

namespace dic::omv {

std::optional<OnesSpan> ones_span(std::span<const std::uint8_t> bits, std::string_view what) {
  std::optional<OnesSpan> span;
  bool closed = false;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) {
      if (closed) {
        throw Error(Errc::NotConsecutiveOnes, std::string(what) + " has non-contiguous 1s");
      }
      if (!span) span = OnesSpan{i, i};
      span->last = i;
    } else if (span) {
      closed = true;
    }
  }
  return span;
}

C1Vector C1Vector::from_dense(std::span<const std::uint8_t> bits) {
  return {bits.size(), ones_span(bits, "vector")};
}

C1Matrix C1Matrix::from_dense(const DenseMatrix& dense) {
  C1Matrix m;
  m.n = dense.size();
  m.rows.reserve(m.n);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != m.n) {
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(i) + " has " + std::to_string(dense[i].size()) +
                                               " columns, expected " + std::to_string(m.n));
    }
    m.rows.push_back(ones_span(dense[i], "row " + std::to_string(i)));
  }
  return m;
}

C1Index C1Index::preprocess(const C1Matrix& m) {
  C1Index idx;
  idx.n_ = m.n;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (const auto& r = m.rows[i]) {
      idx.rows_.insert({i, static_cast<Coord>(r->first), static_cast<Coord>(r->last)});
    }
  }
  return idx;
}

BitVector C1Index::multiply(const C1Vector& v) const {
  if (v.n != n_) {
    throw Error(Errc::DimensionMismatch,
                "vector of length " + std::to_string(v.n) + " against dimension " + std::to_string(n_));
  }
  BitVector out(n_, 0);
  if (!v.ones) return out;
  rows_.visit_intersecting(static_cast<Coord>(v.ones->first), static_cast<Coord>(v.ones->last),
                           [&](const RowInterval& row) { out[row.id] = 1; });
  return out;
}

BitVector C1Index::multiply(std::span<const std::uint8_t> dense) const {
  if (dense.size() != n_) {
    throw Error(Errc::DimensionMismatch,
                "vector of length " + std::to_string(dense.size()) + " against dimension " + std::to_string(n_));
  }
  return multiply(C1Vector::from_dense(dense));
}

BitVector naive_multiply(const DenseMatrix& m, std::span<const std::uint8_t> v) {
  BitVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) {
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(i) + " length differs from vector length");
    }
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc |= static_cast<std::uint8_t>(m[i][j] & v[j]);
    out[i] = acc;
  }
  return out;
}

BitVector parse_bits(std::string_view line, std::size_t n) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.size() != n) {
    throw Error(Errc::DimensionMismatch,
                "line of length " + std::to_string(line.size()) + ", expected " + std::to_string(n));
  }
  BitVector bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (line[i] != '0' && line[i] != '1') {
      throw Error(Errc::TraceInvalid, std::string("unexpected character '") + line[i] + "'");
    }
    bits[i] = static_cast<std::uint8_t>(line[i] - '0');
  }
  return bits;
}

DenseMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::TraceInvalid, "matrix file is empty");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long parsed = std::stoll(line, &used);
    if (parsed < 0) throw Error(Errc::TraceInvalid, "negative dimension");
    n = static_cast<std::size_t>(parsed);
  } catch (const std::logic_error&) {
    throw Error(Errc::TraceInvalid, "first line must be the dimension n");
  }
  DenseMatrix m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw Error(Errc::TraceInvalid, "matrix has " + std::to_string(i) + " rows, expected " + std::to_string(n));
    }
    m.push_back(parse_bits(line, n));
  }
  return m;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) s[i] = '1';
  }
  return s;
}

}  // namespace dic::omv
