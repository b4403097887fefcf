#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "dic/harness.hpp"
#include "dic/reference_oracles.hpp"
#include "dic/trace.hpp"
#include "json.hpp"

using dic::CheckOutcome;
using dic::Errc;
using dic::Error;
using dic::GenParams;
using dic::Trace;
using dic::TraceKind;
using dic::UpdateEvent;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dic::Error");
  return Errc::CheckFailed;
}

dic::RunOptions every_update(dic::SlsMode mode = dic::SlsMode::Dynamic) {
  return {mode, dic::CheckLevel::EveryUpdate, 0};
}

}  // namespace

TEST_CASE("generator shapes") {
  SUBCASE("uniform stays inside the coordinate range") {
    const Trace t = dic::generate({TraceKind::Uniform, 500, 0.0, 1000, 50, 1});
    CHECK(t.size() == 500);
    for (const auto& ev : t) {
      CHECK(ev.op == UpdateEvent::Op::Insert);
      CHECK(ev.lo >= 0);
      CHECK(ev.hi <= 1000);
      CHECK(ev.hi - ev.lo <= 50);
    }
  }
  SUBCASE("nested traces are cliques") {
    for (std::size_t k : {1U, 5U, 40U}) {
      const Trace t = dic::generate({TraceKind::Nested, k, 0.0, 1000000, 0, 9});
      const auto report = dic::run(t, every_update());
      CHECK(report.omega == k);
      CHECK(report.colors_used == k);
      CHECK(report.failure.empty());
    }
  }
  SUBCASE("mixed traces validate and contain deletes") {
    const Trace t = dic::generate({TraceKind::Mixed, 2000, 0.4, 10000, 0, 5});
    CHECK_NOTHROW(dic::validate(t));
    CHECK(dic::has_deletes(t));
  }
  SUBCASE("same seed, same trace") {
    const GenParams p{TraceKind::Mixed, 300, 0.3, 5000, 0, 42};
    CHECK(dic::generate(p) == dic::generate(p));
    GenParams q = p;
    q.seed = 43;
    CHECK_FALSE(dic::generate(p) == dic::generate(q));
  }
  SUBCASE("bad parameters") {
    CHECK(code_of([] { (void)dic::generate({TraceKind::Mixed, 10, 1.5, 100, 0, 0}); }) == Errc::BadParams);
    CHECK(code_of([] { (void)dic::generate({TraceKind::Uniform, 10, 0.5, 100, 0, 0}); }) == Errc::BadParams);
    CHECK(code_of([] { (void)dic::parse_trace_kind("zigzag"); }) == Errc::BadParams);
  }
}

TEST_CASE("trace wire format") {
  CHECK(dic::serialize_event(UpdateEvent::insert(7, -3, 12)) == R"({"op":"insert","id":7,"l":-3,"r":12})");
  CHECK(dic::serialize_event(UpdateEvent::remove(7)) == R"({"op":"delete","id":7})");

  const Trace t = dic::generate({TraceKind::Mixed, 400, 0.3, 1000, 0, 8});
  std::stringstream buf;
  dic::write_trace(buf, t);
  CHECK(dic::read_trace(buf) == t);
  CHECK(dic::parse_trace("\n" + dic::serialize(t) + "\n\n") == t);
}

TEST_CASE("malformed traces") {
  CHECK(code_of([] { (void)dic::parse_event("{not json"); }) == Errc::TraceInvalid);
  CHECK(code_of([] { (void)dic::parse_event(R"({"op":"insert","id":1,"l":0})"); }) == Errc::TraceInvalid);
  CHECK(code_of([] { (void)dic::parse_event(R"({"op":"insert","id":1,"l":0,"r":1,"x":2})"); }) == Errc::TraceInvalid);
  CHECK(code_of([] { (void)dic::parse_event(R"({"op":"move","id":1})"); }) == Errc::TraceInvalid);
  CHECK(code_of([] { (void)dic::parse_trace(R"({"op":"delete","id":3})"); }) == Errc::TraceInvalid);
  CHECK(code_of([] {
          (void)dic::parse_trace("{\"op\":\"insert\",\"id\":1,\"l\":0,\"r\":1}\n{\"op\":\"insert\",\"id\":1,\"l\":2,\"r\":3}");
        }) == Errc::TraceInvalid);
  CHECK(code_of([] { (void)dic::parse_trace(R"({"op":"insert","id":1,"l":5,"r":1})"); }) == Errc::TraceInvalid);
  try {
    (void)dic::parse_trace("{\"op\":\"insert\",\"id\":1,\"l\":0,\"r\":1}\n\n{bad");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("run on the worked example") {
  for (auto mode : {dic::SlsMode::Incremental, dic::SlsMode::Dynamic}) {
    const auto report = dic::run(dic::figure_trace(), every_update(mode));
    CHECK(report.updates == 6);
    CHECK(report.final_n == 6);
    CHECK(report.omega == 4);
    CHECK(report.colors_used == 4);
    CHECK(report.bound == 10);
    CHECK(report.max_level == 2);
    CHECK(report.checks.proper == CheckOutcome::Pass);
    CHECK(report.checks.property_p == CheckOutcome::Pass);
    CHECK(report.checks.invariant_c == CheckOutcome::Pass);
    CHECK(report.checks.color_bound == CheckOutcome::Pass);
    CHECK(report.checks.level_domination == CheckOutcome::Pass);
    CHECK_NOTHROW(dic::require_passed(report));
  }
}

TEST_CASE("run with a delete") {
  Trace t = dic::figure_trace();
  t.push_back(UpdateEvent::remove(5));
  const auto report = dic::run(t, every_update());
  CHECK(report.final_n == 5);
  CHECK(report.omega == 3);
  CHECK(report.colors_used == 3);
  CHECK(report.checks.level_domination == CheckOutcome::Skipped);
  CHECK(report.failure.empty());

  CHECK(code_of([&] { (void)dic::run(t, every_update(dic::SlsMode::Incremental)); }) == Errc::ModeViolation);
}

TEST_CASE("check levels") {
  const Trace t = dic::figure_trace();
  const auto none = dic::run(t, {dic::SlsMode::Dynamic, dic::CheckLevel::None, 0});
  CHECK(none.checks.proper == CheckOutcome::Skipped);
  CHECK(none.checks.level_domination == CheckOutcome::Skipped);
  const auto final_only = dic::run(t, {dic::SlsMode::Dynamic, dic::CheckLevel::Final, 0});
  CHECK(final_only.checks.invariant_c == CheckOutcome::Pass);
  CHECK(dic::parse_check_level("every_update") == dic::CheckLevel::EveryUpdate);
  CHECK(code_of([] { (void)dic::parse_check_level("sometimes"); }) == Errc::BadParams);
}

TEST_CASE("require_passed throws CheckFailed") {
  dic::Report r;
  r.checks.proper = CheckOutcome::Fail;
  r.failure = "proper: ids 1 2";
  CHECK(code_of([&] { dic::require_passed(r); }) == Errc::CheckFailed);
}

TEST_CASE("bench") {
  const Trace t = dic::generate({TraceKind::Mixed, 500, 0.3, 10000, 0, 2});
  const auto report = dic::bench(t, {dic::SlsMode::Dynamic, 4, 2, 2});
  CHECK(report.repeat == 4);
  CHECK(report.updates == 500);
  CHECK(report.per_update_ns.p50 <= report.per_update_ns.p90);
  CHECK(report.per_update_ns.p99 <= report.per_update_ns.max);
  CHECK(report.per_update_ns.max > 0);

  const auto empty = dic::bench(Trace{}, {dic::SlsMode::Dynamic, 3, 1, 0});
  CHECK(empty.updates == 0);
  CHECK(empty.omega == 0);
  CHECK(empty.bound == 0);
  CHECK(empty.per_update_ns.max == 0);

  CHECK(code_of([&] { (void)dic::bench(t, {dic::SlsMode::Dynamic, 0, 1, 0}); }) == Errc::BadParams);
}

TEST_CASE("latency percentiles use nearest rank") {
  std::vector<std::uint64_t> s;
  for (std::uint64_t v = 1; v <= 100; ++v) s.push_back(101 - v);
  const auto l = dic::LatencySummary::from_samples(s);
  CHECK(l.p50 == 50);
  CHECK(l.p90 == 90);
  CHECK(l.p99 == 99);
  CHECK(l.max == 100);
}

TEST_CASE("report JSON") {
  const auto report = dic::run(dic::figure_trace(), every_update());
  const auto j = nlohmann::json::parse(dic::to_json(report));
  CHECK(j["omega"] == 4);
  CHECK(j["bound"] == 10);
  CHECK(j["checks"]["proper"] == "pass");
  CHECK(j["mode"] == "dynamic");
  CHECK(j.contains("per_update_ns"));
  CHECK_FALSE(j.contains("failure"));
  CHECK_FALSE(nlohmann::json::parse(dic::to_json(report, false)).contains("per_update_ns"));
}
