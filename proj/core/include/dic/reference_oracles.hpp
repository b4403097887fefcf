#pragma once

// Brute-force ground truth for the coloring engine.
//
// Nothing here uses the engine's index or SLS machinery; everything is
// recomputed from plain interval lists.

#include <span>
#include <string>
#include <vector>

#include "dic/types.hpp"

namespace dic {
class ColoringEngine;
}

namespace dic::oracle {

struct CheckResult {
  bool ok = true;
  std::string clause;              // which rule failed
  std::vector<IntervalId> ids;     // offending intervals

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string clause, std::vector<IntervalId> ids) {
    return {false, std::move(clause), std::move(ids)};
  }
  [[nodiscard]] std::string describe() const;
};

/// Maximum number of intervals sharing a point (sweep; opens before closes).
std::size_t omega(std::span<const Interval> intervals);

/// Same quantity by counting, for every endpoint, the intervals stabbing it.
std::size_t omega_by_stabbing(std::span<const Interval> intervals);

/// Level the online Kierstead-Trotter rule gives history[i], given the levels
/// it gave history[0..i).
Level kt_level(std::span<const Interval> history, std::size_t i, std::span<const Level> prior_levels);

/// Kierstead-Trotter levels for the whole insertion history.
std::vector<Level> kt_levels(std::span<const Interval> history);

/// Kierstead-Trotter colors: levels plus smallest-unused offsets among
/// earlier same-level neighbours.  Throws std::logic_error if an offset
/// cannot be found.
std::vector<Color> kt_colors(std::span<const Interval> history);

/// Smallest level absent among the intervals containing t.
Level height_at(std::span<const Interval> intervals, Coord t);

/// Intersecting intervals carry different colors.
CheckResult check_proper(std::span<const Interval> intervals);

/// Level 0 is independent with offset 1; every other level has degree at
/// most 2, no containment between intersecting members, offsets in {1,2,3}.
CheckResult check_property_p(std::span<const Interval> intervals);

/// Each interval contains an endpoint of the live set whose height is at
/// least the interval's level; heights recomputed from scratch.
CheckResult check_invariant_c(std::span<const Interval> intervals);

/// The above on the engine's live set, plus agreement of every stored SLS
/// record with a from-scratch recomputation and of the endpoint set with
/// the live endpoints.
CheckResult check_invariant_c(const ColoringEngine& engine);

/// Distinct colors do not exceed 3*omega - 2.
CheckResult check_color_bound(std::span<const Interval> intervals);

/// For an insert-only history (engine colors attached), every level is at
/// most the level of an independent Kierstead-Trotter run on the same history.
/// This does not hold in general once the two runs disagree on an earlier
/// interval; see check_stepwise_domination.
CheckResult check_level_domination(std::span<const Interval> history);

/// Every level is at most the Kierstead-Trotter rule evaluated against the
/// engine's own levels for the earlier intervals.
CheckResult check_stepwise_domination(std::span<const Interval> history);

/// Intervals violating Invariant C in the given state.
std::vector<IntervalId> invariant_c_violators(std::span<const Interval> intervals);

/// Distinct colors present.
std::size_t distinct_colors(std::span<const Interval> intervals);

}  // namespace dic::oracle
