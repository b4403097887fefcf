#include "dic/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include "dic/update_verifier.hpp"
#include "json.hpp"

namespace dic {

namespace {

using Clock = std::chrono::steady_clock;

// Every-update runs check locally after each update and re-run the
// whole-state checkers this often.
constexpr std::size_t kFullCheckPeriod = 1024;

void apply(ColoringEngine& engine, const UpdateEvent& ev) {
  if (ev.op == UpdateEvent::Op::Insert) {
    engine.insert(ev.id, ev.lo, ev.hi);
  } else {
    engine.remove(ev.id);
  }
}

void replay(const Trace& trace, ColoringEngine& engine, std::vector<std::uint64_t>* samples) {
  for (const UpdateEvent& ev : trace) {
    const auto t0 = Clock::now();
    apply(engine, ev);
    const auto t1 = Clock::now();
    if (samples != nullptr) {
      samples->push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
  }
}

void check_preconditions(const Trace& trace, SlsMode mode) {
  validate(trace);
  if (mode == SlsMode::Incremental && has_deletes(trace)) {
    throw Error(Errc::ModeViolation, "incremental mode cannot replay a trace containing deletes");
  }
}

void merge(CheckOutcome& slot, const oracle::CheckResult& r) {
  if (!r.ok) {
    slot = CheckOutcome::Fail;
  } else if (slot != CheckOutcome::Fail) {
    slot = CheckOutcome::Pass;
  }
}

void fill_summary(Report& report, const ColoringEngine& engine) {
  const std::vector<Interval> live = engine.intervals();
  report.final_n = live.size();
  report.omega = oracle::omega(live);
  report.colors_used = engine.colors_used();
  report.bound = report.omega == 0 ? 0 : 3 * report.omega - 2;
  report.max_level = engine.omega_hint() == 0 ? 0 : engine.omega_hint() - 1;
}

}  // namespace

CheckLevel parse_check_level(std::string_view text) {
  if (text == "none") return CheckLevel::None;
  if (text == "final") return CheckLevel::Final;
  if (text == "every_update") return CheckLevel::EveryUpdate;
  throw Error(Errc::BadParams, "unknown check level '" + std::string(text) + "'");
}

std::string_view to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Skipped: return "skipped";
  }
  return "skipped";
}

bool Checks::any_failed() const {
  for (CheckOutcome c : {proper, property_p, invariant_c, color_bound, level_domination}) {
    if (c == CheckOutcome::Fail) return true;
  }
  return false;
}

LatencySummary LatencySummary::from_samples(std::vector<std::uint64_t> samples) {
  LatencySummary s;
  if (samples.empty()) return s;
  std::sort(samples.begin(), samples.end());
  auto rank = [&](double q) {
    auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(samples.size())));
    return samples[std::clamp<std::size_t>(k, 1, samples.size()) - 1];
  };
  s.p50 = rank(0.50);
  s.p90 = rank(0.90);
  s.p99 = rank(0.99);
  s.max = samples.back();
  return s;
}

oracle::CheckResult verify_state(const ColoringEngine& engine, Checks& checks) {
  const std::vector<Interval> live = engine.intervals();
  oracle::CheckResult first;
  auto take = [&](CheckOutcome& slot, oracle::CheckResult r) {
    merge(slot, r);
    if (!r.ok && first.ok) first = std::move(r);
  };
  take(checks.proper, oracle::check_proper(live));
  take(checks.property_p, oracle::check_property_p(live));
  take(checks.invariant_c, oracle::check_invariant_c(engine));
  take(checks.color_bound, oracle::check_color_bound(live));
  return first;
}

Report run(const Trace& trace, const RunOptions& options) {
  check_preconditions(trace, options.mode);
  Report report;
  report.seed = options.seed;
  report.mode = options.mode;

  ColoringEngine engine(options.mode);
  std::optional<oracle::UpdateVerifier> verifier;
  if (options.check == CheckLevel::EveryUpdate) verifier.emplace(engine);
  auto record = [&](const oracle::StateChecks& sc, std::size_t k) {
    merge(report.checks.proper, sc.proper);
    merge(report.checks.property_p, sc.property_p);
    merge(report.checks.invariant_c, sc.invariant_c);
    merge(report.checks.color_bound, sc.color_bound);
    if (const auto* bad = sc.first_failure(); bad != nullptr && report.failure.empty()) {
      report.failure = "after update " + std::to_string(k) + ": " + bad->describe();
    }
  };

  std::vector<std::uint64_t> samples;
  samples.reserve(trace.size());
  std::vector<Recolor> recolored;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const UpdateEvent& ev = trace[k];
    const auto t0 = Clock::now();
    if (ev.op == UpdateEvent::Op::Insert) {
      engine.insert(ev.id, ev.lo, ev.hi);
    } else {
      recolored = engine.remove(ev.id);
    }
    const auto t1 = Clock::now();
    samples.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    ++report.updates;
    if (!verifier) continue;
    record(ev.op == UpdateEvent::Op::Insert ? verifier->after_insert(ev.id) : verifier->after_remove(ev.id, recolored),
           k + 1);
    if (report.failure.empty() && (k + 1) % kFullCheckPeriod == 0) record(verifier->full(), k + 1);
    if (!report.failure.empty()) break;
  }

  if (verifier && report.failure.empty()) record(verifier->full(), report.updates);
  if (options.check == CheckLevel::Final) {
    const auto r = verify_state(engine, report.checks);
    if (!r.ok) report.failure = "final state: " + r.describe();
  }
  if (options.check != CheckLevel::None && report.failure.empty() && !has_deletes(trace)) {
    std::vector<Interval> history;
    history.reserve(trace.size());
    for (const UpdateEvent& ev : trace) history.push_back(*engine.find(ev.id));
    const auto r = oracle::check_stepwise_domination(history);
    merge(report.checks.level_domination, r);
    if (!r.ok) report.failure = "level domination: " + r.describe();
  }

  fill_summary(report, engine);
  report.per_update_ns = LatencySummary::from_samples(std::move(samples));
  return report;
}

Report bench(const Trace& trace, const BenchOptions& options) {
  check_preconditions(trace, options.mode);
  if (options.repeat == 0) throw Error(Errc::BadParams, "repeat must be at least 1");
  Report report;
  report.seed = options.seed;
  report.mode = options.mode;
  report.repeat = options.repeat;
  report.updates = trace.size();

  {
    ColoringEngine warmup(options.mode);
    replay(trace, warmup, nullptr);
  }

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, options.repeat);
  std::vector<std::vector<std::uint64_t>> per_worker(workers);
  auto work = [&](std::size_t w) {
    for (std::size_t r = w; r < options.repeat; r += workers) {
      ColoringEngine engine(options.mode);
      replay(trace, engine, &per_worker[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<std::uint64_t> samples;
  for (auto& v : per_worker) samples.insert(samples.end(), v.begin(), v.end());
  report.per_update_ns = LatencySummary::from_samples(std::move(samples));

  ColoringEngine final_state(options.mode);
  replay(trace, final_state, nullptr);
  fill_summary(report, final_state);
  return report;
}

void require_passed(const Report& report) {
  if (report.checks.any_failed() || !report.failure.empty()) throw Error(Errc::CheckFailed, report.failure);
}

std::string to_json(const Report& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["updates"] = report.updates;
  j["final_n"] = report.final_n;
  j["omega"] = report.omega;
  j["colors_used"] = report.colors_used;
  j["bound"] = report.bound;
  j["max_level"] = report.max_level;
  if (include_timing) {
    j["per_update_ns"] = {{"p50", report.per_update_ns.p50},
                          {"p90", report.per_update_ns.p90},
                          {"p99", report.per_update_ns.p99},
                          {"max", report.per_update_ns.max}};
  }
  nlohmann::ordered_json checks;
  checks["proper"] = to_string(report.checks.proper);
  checks["property_p"] = to_string(report.checks.property_p);
  checks["invariant_c"] = to_string(report.checks.invariant_c);
  checks["color_bound"] = to_string(report.checks.color_bound);
  checks["level_domination"] = to_string(report.checks.level_domination);
  j["checks"] = checks;
  j["seed"] = report.seed;
  j["mode"] = to_string(report.mode);
  if (report.repeat != 0) j["repeat"] = report.repeat;
  if (!report.failure.empty()) j["failure"] = report.failure;
  return j.dump(2);
}

}  // namespace dic
