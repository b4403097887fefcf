#pragma once

// Dynamic interval coloring with at most 3*omega - 2 colors.
//
// Every live interval gets a color (level, offset).  The level of a new
// interval is the largest SLS height over the endpoints it contains; the
// offset is the smallest value in {1,2,3} unused by same-level neighbours.
// Deleting an interval may lower the levels of the intervals it overlapped
// at higher levels; those are re-leveled in (level, insertion time) order.

#include <cstdint>
#include <map>
#include <vector>

#include "dic/interval_index.hpp"
#include "dic/sls.hpp"
#include "dic/types.hpp"

namespace dic {

struct Recolor {
  IntervalId id = 0;
  Color before;
  Color after;

  friend bool operator==(const Recolor&, const Recolor&) = default;
};

struct EngineStats {
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  std::uint64_t dirty_total = 0;     // summed DIRTY sizes over all deletes
  std::uint64_t relevels = 0;        // intervals whose level dropped
  std::uint64_t endpoint_visits = 0; // SLS records touched by max-height scans
  std::uint64_t max_dirty = 0;
  std::uint64_t offset_overflows = 0; // offsets above 3, see smallest_free_offset
};

using LiveIndex = IntervalIndex<Interval>;
using EndpointIndex = IntervalIndex<SlsRecord, SlsKeyTraits>;

class ColoringEngine {
 public:
  explicit ColoringEngine(SlsMode mode);

  [[nodiscard]] SlsMode mode() const { return mode_; }

  /// Colors a new interval.  Throws InvalidInterval or DuplicateId.
  Color insert(IntervalId id, Coord lo, Coord hi);

  /// Removes a live interval and repairs the levels it supported.  Returns
  /// the intervals whose color changed.  Throws ModeViolation (incremental
  /// engines) or UnknownId.
  std::vector<Recolor> remove(IntervalId id);

  [[nodiscard]] std::size_t size() const { return live_.size(); }
  [[nodiscard]] const Interval* find(IntervalId id) const { return live_.find(id); }
  [[nodiscard]] std::vector<Interval> intervals() const { return live_.values(); }

  [[nodiscard]] const LiveIndex& live() const { return live_; }
  [[nodiscard]] const EndpointIndex& endpoints() const { return endpoints_; }
  /// T[level]; empty index when nothing has ever held that level.
  [[nodiscard]] const LiveIndex& level_set(Level level) const;
  [[nodiscard]] std::size_t level_count() const { return levels_.size(); }

  [[nodiscard]] std::vector<Color> colors_in_use() const;
  [[nodiscard]] std::size_t colors_used() const { return color_counts_.size(); }
  /// One more than the largest live level; 0 when empty.
  [[nodiscard]] Level omega_hint() const;

  /// Ids of the DIRTY queue built by the most recent remove(), in processing order.
  [[nodiscard]] const std::vector<IntervalId>& last_dirty() const { return last_dirty_; }
  [[nodiscard]] const EngineStats& stats() const { return stats_; }
  [[nodiscard]] std::uint64_t clock() const { return clock_; }

 private:
  // Fills scratch_ with the records of every endpoint inside [lo, hi] and
  // returns the largest height among them.
  Level scan_endpoints(Coord lo, Coord hi);
  Offset smallest_free_offset(Level level, const Interval& iv, IntervalId exclude);
  LiveIndex& level_set_mut(Level level);
  void acquire_endpoint(Coord t);
  void release_endpoint(Coord t);
  void count_color(Color c, int delta);

  SlsMode mode_;
  LiveIndex live_;
  EndpointIndex endpoints_;
  std::vector<LiveIndex> levels_;
  std::map<Color, std::size_t> color_counts_;
  std::uint64_t clock_ = 0;
  EngineStats stats_;
  std::vector<IntervalId> last_dirty_;
  std::vector<SlsRecord*> scratch_;
  std::vector<Level> level_buf_;
};

}  // namespace dic
