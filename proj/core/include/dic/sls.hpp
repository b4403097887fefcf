#pragma once

// Supporting line segment records.
//
// A record at coordinate t tracks which levels are held by intervals
// stabbing t.  Its height is the smallest level not held there.  Levels
// are tracked over a gap-free prefix {0, ..., ceiling-1}; every tracked
// level is either occupied or vacant, and the ceiling never shrinks.

#include <cstdint>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "dic/types.hpp"

namespace dic {

/// Insert-only backend: bit array of occupied levels plus an intrusive,
/// ascending free-slot list threaded through per-level handle arrays.
/// Storage grows by doubling.
class IncrementalSls {
 public:
  IncrementalSls() = default;

  [[nodiscard]] Level height() const { return head_ != kNil ? static_cast<Level>(head_) : ceiling_; }
  [[nodiscard]] Level ceiling() const { return ceiling_; }
  [[nodiscard]] std::size_t capacity() const { return capacity_; }
  [[nodiscard]] bool occupied(Level l) const;
  void mark(Level l);

  [[nodiscard]] std::vector<Level> occupied_levels() const;
  [[nodiscard]] std::vector<Level> vacant_levels() const;

 private:
  static constexpr std::int32_t kNil = -1;

  void grow_to_fit(Level l);
  void append_free(Level l);
  void unlink_free(Level l);

  std::vector<std::uint64_t> bits_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> prev_;
  std::size_t capacity_ = 0;
  Level ceiling_ = 0;
  std::int32_t head_ = kNil;
  std::int32_t tail_ = kNil;
};

/// Fully dynamic backend: two balanced ordered sets of occupied and vacant levels.
class DynamicSls {
 public:
  [[nodiscard]] Level height() const;
  [[nodiscard]] Level ceiling() const;
  [[nodiscard]] bool occupied(Level l) const { return occupied_.count(l) != 0; }
  void mark(Level l);
  void unmark(Level l);

  [[nodiscard]] std::vector<Level> occupied_levels() const { return {occupied_.begin(), occupied_.end()}; }
  [[nodiscard]] std::vector<Level> vacant_levels() const { return {vacant_.begin(), vacant_.end()}; }

 private:
  std::set<Level> occupied_;
  std::set<Level> vacant_;
};

class SlsRecord {
 public:
  SlsRecord(Coord coord, SlsMode mode);

  /// Record whose occupied set is exactly `levels_present` (any order,
  /// duplicates ignored) and whose vacant set is the rest of {0..max}.
  static SlsRecord build(Coord coord, SlsMode mode, std::span<const Level> levels_present);

  [[nodiscard]] Coord coord() const { return coord_; }
  [[nodiscard]] SlsMode mode() const { return mode_; }

  [[nodiscard]] Level height() const;
  [[nodiscard]] Level ceiling() const;
  [[nodiscard]] bool is_occupied(Level l) const;

  /// Idempotent.  Pads [ceiling, l) as vacant when l lies above the ceiling.
  void mark(Level l);

  /// Dynamic mode only.  Throws ModeViolation or NotMarked.
  void unmark(Level l);

  [[nodiscard]] std::vector<Level> occupied() const;
  [[nodiscard]] std::vector<Level> vacant_below() const;

  [[nodiscard]] std::uint32_t refcount() const { return refcount_; }
  void acquire() { ++refcount_; }
  /// Returns the refcount after the release.
  std::uint32_t release() { return --refcount_; }

 private:
  Coord coord_;
  SlsMode mode_;
  std::uint32_t refcount_ = 0;
  std::variant<IncrementalSls, DynamicSls> backend_;
};

struct SlsKeyTraits {
  static Coord lo(const SlsRecord& r) { return r.coord(); }
  static Coord hi(const SlsRecord& r) { return r.coord(); }
  static Coord id(const SlsRecord& r) { return r.coord(); }
};

}  // namespace dic
