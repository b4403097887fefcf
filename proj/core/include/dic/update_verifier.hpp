#pragma once

// Per-update verification that only re-examines the part of the line an
// update could have changed.
//
// The verifier keeps its own copy of the live set (ordered by left
// endpoint, plus the longest length seen) and reads colors back from the
// engine.  After an insert of X it checks every interval meeting X; after a
// delete of X it checks every interval meeting X or meeting an interval the
// engine reported as recolored.  Intervals outside that region keep their
// neighbourhoods and their endpoint heights, so their status is the one
// established by earlier calls.  full() re-reads the whole engine, reports
// any interval whose color changed without being reported, and runs the
// whole-state checkers.

#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "dic/coloring_engine.hpp"
#include "dic/reference_oracles.hpp"

namespace dic::oracle {

struct StateChecks {
  CheckResult proper;
  CheckResult property_p;
  CheckResult invariant_c;
  CheckResult color_bound;
  CheckResult sync;  // engine colors match what the reported updates imply

  [[nodiscard]] bool ok() const;
  /// First failing clause in the order above, or nullptr.
  [[nodiscard]] const CheckResult* first_failure() const;
};

class UpdateVerifier {
 public:
  /// Takes a snapshot of the engine's current state.  The engine must
  /// outlive the verifier.
  explicit UpdateVerifier(const ColoringEngine& engine);

  StateChecks after_insert(IntervalId id);

  /// `id` must be the interval just removed; `recolored` is what remove()
  /// returned.
  StateChecks after_remove(IntervalId id, std::span<const Recolor> recolored);

  /// Whole-state checks; also resynchronizes the local copy.
  StateChecks full();

  [[nodiscard]] std::size_t size() const { return by_lo_.size(); }

 private:
  void add(const Interval& iv);
  void forget(IntervalId id);
  // Re-reads the color of a mirrored interval; false if the engine lost it.
  bool refresh(IntervalId id);
  [[nodiscard]] std::vector<const Interval*> meeting(Coord a, Coord b) const;
  void collect_region(Coord a, Coord b, std::vector<IntervalId>& out) const;
  StateChecks check_region(std::vector<IntervalId> region, std::vector<IntervalId> lost);
  void rebuild();

  [[nodiscard]] const Interval* mirrored(IntervalId id) const;
  Interval* mirrored(IntervalId id);

  const ColoringEngine* engine_;
  std::map<std::pair<Coord, IntervalId>, Interval> by_lo_;
  std::unordered_map<IntervalId, Coord> lo_of_;
  Coord max_len_ = 0;
  std::size_t omega_floor_ = 0;  // a lower bound on the current clique number
  std::map<Color, std::size_t> color_counts_;
};

}  // namespace dic::oracle
