#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "dic/reference_oracles.hpp"
#include "dic/trace.hpp"

using dic::Color;
using dic::Interval;
using dic::IntervalId;
using dic::Level;
namespace oracle = dic::oracle;

namespace {

Interval colored(IntervalId id, dic::Coord lo, dic::Coord hi, Level level, dic::Offset offset) {
  Interval iv{id, lo, hi};
  iv.level = level;
  iv.offset = offset;
  return iv;
}

std::vector<Interval> figure_history() {
  std::vector<Interval> out;
  for (const auto& ev : dic::figure_trace()) out.push_back(Interval{ev.id, ev.lo, ev.hi});
  return out;
}

// Engine-independent coloring of the worked example, worked out by hand.
std::vector<Interval> figure_colored() {
  return {colored(1, 1, 2, 0, 1), colored(2, 8, 9, 0, 1), colored(3, 1, 7, 1, 1),
          colored(4, 3, 9, 1, 2), colored(5, 4, 6, 0, 1), colored(6, 4, 6, 2, 1)};
}

}  // namespace

TEST_CASE("omega on small families") {
  CHECK(oracle::omega(std::vector<Interval>{}) == 0);
  CHECK(oracle::omega(std::vector<Interval>{{1, 0, 0}}) == 1);
  // Closed intervals sharing only an endpoint overlap.
  CHECK(oracle::omega(std::vector<Interval>{{1, 0, 2}, {2, 2, 4}}) == 2);
  CHECK(oracle::omega(std::vector<Interval>{{1, 0, 1}, {2, 2, 4}}) == 1);
  CHECK(oracle::omega(figure_history()) == 4);
}

TEST_CASE("omega agrees with per-endpoint stabbing counts") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<dic::Coord> coord(0, 300);
  std::uniform_int_distribution<dic::Coord> len(0, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Interval> fam;
    const auto n = static_cast<IntervalId>(1 + trial);
    for (IntervalId id = 0; id < n; ++id) {
      const dic::Coord lo = coord(rng);
      fam.push_back(Interval{id, lo, lo + len(rng)});
    }
    CHECK(oracle::omega(fam) == oracle::omega_by_stabbing(fam));
  }
}

TEST_CASE("Kierstead-Trotter levels on the worked example") {
  const auto history = figure_history();
  CHECK(oracle::kt_levels(history) == std::vector<Level>{0, 0, 1, 1, 0, 3});
  const std::vector<Level> prior = {0, 0, 1, 1, 0};
  CHECK(oracle::kt_level(history, 5, prior) == 3);
  CHECK(oracle::kt_level(history, 0, {}) == 0);
}

TEST_CASE("Kierstead-Trotter colors exist on random histories") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<dic::Coord> coord(0, 500);
  std::uniform_int_distribution<dic::Coord> len(0, 60);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Interval> history;
    for (IntervalId id = 1; id <= 120; ++id) {
      const dic::Coord lo = coord(rng);
      history.push_back(Interval{id, lo, lo + len(rng)});
    }
    std::vector<Color> colors;
    CHECK_NOTHROW(colors = oracle::kt_colors(history));
    for (std::size_t i = 0; i < history.size(); ++i) {
      history[i].level = colors[i].level;
      history[i].offset = colors[i].offset;
    }
    CHECK(oracle::check_proper(history).ok);
    CHECK(oracle::check_property_p(history).ok);
  }
}

TEST_CASE("height at a point") {
  const auto fig = figure_colored();
  CHECK(oracle::height_at(fig, 4) == 3);
  CHECK(oracle::height_at(fig, 1) == 2);
  CHECK(oracle::height_at(fig, 100) == 0);
  CHECK(oracle::height_at(std::vector<Interval>{colored(1, 0, 5, 1, 1)}, 2) == 0);
}

TEST_CASE("checkers accept the empty set and the hand-colored example") {
  const std::vector<Interval> none;
  CHECK(oracle::check_proper(none).ok);
  CHECK(oracle::check_property_p(none).ok);
  CHECK(oracle::check_invariant_c(none).ok);
  CHECK(oracle::check_color_bound(none).ok);

  const auto fig = figure_colored();
  CHECK(oracle::check_proper(fig).ok);
  CHECK(oracle::check_property_p(fig).ok);
  CHECK(oracle::check_invariant_c(fig).ok);
  CHECK(oracle::check_color_bound(fig).ok);
  CHECK(oracle::check_level_domination(fig).ok);
  CHECK(oracle::check_stepwise_domination(fig).ok);
  CHECK(oracle::distinct_colors(fig) == 4);
  CHECK(oracle::invariant_c_violators(fig).empty());
}

TEST_CASE("checkers reject corrupted colorings") {
  SUBCASE("proper") {
    auto fig = figure_colored();
    fig[3].offset = 1;  // I4 now shares (1,1) with I3
    const auto r = oracle::check_proper(fig);
    CHECK_FALSE(r.ok);
    CHECK(r.ids == std::vector<IntervalId>{3, 4});
  }
  SUBCASE("level 0 must be independent") {
    const std::vector<Interval> bad = {colored(1, 0, 5, 0, 1), colored(2, 4, 8, 0, 2)};
    CHECK_FALSE(oracle::check_property_p(bad).ok);
  }
  SUBCASE("containment inside a level") {
    const std::vector<Interval> bad = {colored(1, 0, 10, 1, 1), colored(2, 3, 4, 1, 2)};
    CHECK_FALSE(oracle::check_property_p(bad).ok);
  }
  SUBCASE("degree three inside a level") {
    const std::vector<Interval> bad = {colored(1, 0, 10, 1, 1), colored(2, 8, 20, 1, 2), colored(3, -5, 2, 1, 3),
                                       colored(4, 5, 12, 1, 1)};
    CHECK_FALSE(oracle::check_property_p(bad).ok);
  }
  SUBCASE("offset out of range") {
    const std::vector<Interval> bad = {colored(1, 0, 10, 1, 4)};
    CHECK_FALSE(oracle::check_property_p(bad).ok);
  }
  SUBCASE("invariant C") {
    auto fig = figure_colored();
    fig[4].level = 3;  // vacates level 0 on [4,6], stranding I5 and I6
    fig[4].offset = 1;
    CHECK_FALSE(oracle::check_invariant_c(fig).ok);
    CHECK(oracle::invariant_c_violators(fig) == std::vector<IntervalId>{5, 6});
  }
  SUBCASE("color bound") {
    // Two disjoint intervals (omega 1) using two colors.
    const std::vector<Interval> bad = {colored(1, 0, 1, 0, 1), colored(2, 5, 6, 1, 1)};
    CHECK_FALSE(oracle::check_color_bound(bad).ok);
  }
  SUBCASE("level domination") {
    auto fig = figure_colored();
    fig[0].level = 1;
    CHECK_FALSE(oracle::check_level_domination(fig).ok);
    CHECK_FALSE(oracle::check_stepwise_domination(fig).ok);
  }
}

TEST_CASE("describe names the clause and ids") {
  const auto r = oracle::CheckResult::fail("proper", {3, 4});
  const auto text = r.describe();
  CHECK(text.find("proper") != std::string::npos);
  CHECK(text.find('3') != std::string::npos);
  CHECK(oracle::CheckResult::pass().ok);
}
