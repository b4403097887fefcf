#pragma once

// Trace replay, per-update verification and benchmarking.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dic/coloring_engine.hpp"
#include "dic/reference_oracles.hpp"
#include "dic/trace.hpp"
#include "dic/types.hpp"

namespace dic {

enum class CheckLevel { None, Final, EveryUpdate };
enum class CheckOutcome { Pass, Fail, Skipped };

CheckLevel parse_check_level(std::string_view text);
std::string_view to_string(CheckOutcome outcome);

struct Checks {
  CheckOutcome proper = CheckOutcome::Skipped;
  CheckOutcome property_p = CheckOutcome::Skipped;
  CheckOutcome invariant_c = CheckOutcome::Skipped;
  CheckOutcome color_bound = CheckOutcome::Skipped;
  CheckOutcome level_domination = CheckOutcome::Skipped;

  [[nodiscard]] bool any_failed() const;
};

struct LatencySummary {
  std::uint64_t p50 = 0;
  std::uint64_t p90 = 0;
  std::uint64_t p99 = 0;
  std::uint64_t max = 0;

  /// Nearest-rank percentiles over raw samples.
  static LatencySummary from_samples(std::vector<std::uint64_t> samples);
};

struct Report {
  std::size_t updates = 0;
  std::size_t final_n = 0;
  std::size_t omega = 0;
  std::size_t colors_used = 0;
  std::size_t bound = 0;  // 3*omega - 2, or 0 for an empty final state
  Level max_level = 0;
  LatencySummary per_update_ns;
  Checks checks;
  std::uint64_t seed = 0;
  SlsMode mode = SlsMode::Dynamic;
  std::size_t repeat = 0;  // bench only
  std::string failure;     // first violation, empty when all checks pass
};

struct RunOptions {
  SlsMode mode = SlsMode::Dynamic;
  CheckLevel check = CheckLevel::Final;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  SlsMode mode = SlsMode::Dynamic;
  std::size_t repeat = 1;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
};

/// Runs every state checker on the engine's current live set and merges
/// the outcomes into `checks`.  Returns the first failure, if any.
oracle::CheckResult verify_state(const ColoringEngine& engine, Checks& checks);

/// Replays `trace`.  Throws TraceInvalid for an invalid trace and
/// ModeViolation for a delete-bearing trace in incremental mode.  Check
/// failures are reported in the returned Report, not thrown.
Report run(const Trace& trace, const RunOptions& options);

/// One warm-up replay, then `repeat` timed replays without checks.
Report bench(const Trace& trace, const BenchOptions& options);

/// Throws CheckFailed carrying report.failure when any check failed.
void require_passed(const Report& report);

std::string to_json(const Report& report, bool include_timing = true);

}  // namespace dic
