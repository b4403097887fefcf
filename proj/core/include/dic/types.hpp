#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dic {

using IntervalId = std::uint64_t;
using Coord = std::int64_t;
using Level = std::uint32_t;
using Offset = std::uint8_t;

/// A color is the pair (level, offset); offsets are drawn from {1, 2, 3}.
struct Color {
  Level level = 0;
  Offset offset = 1;

  friend constexpr auto operator<=>(const Color&, const Color&) = default;
};

std::string to_string(const Color& c);

/// A closed integer interval [lo, hi] with its current color.
///
/// `inserted_at` is the update counter value at insertion time and orders
/// intervals of equal level when a deletion re-levels its neighbours.
struct Interval {
  IntervalId id = 0;
  Coord lo = 0;
  Coord hi = 0;
  Level level = 0;
  Offset offset = 1;
  std::uint64_t inserted_at = 0;

  [[nodiscard]] constexpr Color color() const { return {level, offset}; }
  [[nodiscard]] constexpr bool contains(Coord t) const { return lo <= t && t <= hi; }
  [[nodiscard]] constexpr bool intersects(Coord a, Coord b) const {
    return (lo > a ? lo : a) <= (hi < b ? hi : b);
  }
  [[nodiscard]] constexpr bool intersects(const Interval& o) const { return intersects(o.lo, o.hi); }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

enum class SlsMode { Incremental, Dynamic };

std::string_view to_string(SlsMode mode);
SlsMode parse_mode(std::string_view text);

enum class Errc {
  DuplicateId,
  UnknownId,
  InvalidQuery,
  InvalidInterval,
  ModeViolation,
  NotMarked,
  NotConsecutiveOnes,
  DimensionMismatch,
  BadParams,
  TraceInvalid,
  CheckFailed,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dic
