#include "dic/reference_oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "dic/coloring_engine.hpp"

namespace dic::oracle {

namespace {

std::vector<Interval> sorted_by_lo(std::span<const Interval> intervals) {
  std::vector<Interval> s(intervals.begin(), intervals.end());
  std::sort(s.begin(), s.end(), [](const Interval& a, const Interval& b) {
    return std::tie(a.lo, a.hi, a.id) < std::tie(b.lo, b.hi, b.id);
  });
  return s;
}

// Calls f(a, b) for every intersecting pair, a before b in lo order.
template <typename F>
void for_each_intersecting_pair(const std::vector<Interval>& by_lo, F&& f) {
  for (std::size_t i = 0; i < by_lo.size(); ++i) {
    for (std::size_t j = i + 1; j < by_lo.size() && by_lo[j].lo <= by_lo[i].hi; ++j) {
      f(by_lo[i], by_lo[j]);
    }
  }
}

Level smallest_missing(std::vector<Level>& levels) {
  std::sort(levels.begin(), levels.end());
  Level h = 0;
  for (Level l : levels) {
    if (l == h) {
      ++h;
    } else if (l > h) {
      break;
    }
  }
  return h;
}

struct EndpointLevels {
  std::vector<Coord> coords;               // sorted, unique
  std::vector<std::vector<Level>> levels;  // levels of intervals stabbing coords[k]
};

EndpointLevels endpoint_levels(std::span<const Interval> intervals) {
  EndpointLevels out;
  for (const Interval& iv : intervals) {
    out.coords.push_back(iv.lo);
    out.coords.push_back(iv.hi);
  }
  std::sort(out.coords.begin(), out.coords.end());
  out.coords.erase(std::unique(out.coords.begin(), out.coords.end()), out.coords.end());
  out.levels.resize(out.coords.size());
  for (const Interval& iv : intervals) {
    auto first = std::lower_bound(out.coords.begin(), out.coords.end(), iv.lo);
    auto last = std::upper_bound(out.coords.begin(), out.coords.end(), iv.hi);
    for (auto it = first; it != last; ++it) out.levels[it - out.coords.begin()].push_back(iv.level);
  }
  return out;
}

std::vector<Level> endpoint_heights(EndpointLevels& el) {
  std::vector<Level> h(el.coords.size());
  for (std::size_t k = 0; k < el.coords.size(); ++k) h[k] = smallest_missing(el.levels[k]);
  return h;
}

}  // namespace

std::string CheckResult::describe() const {
  if (ok) return "ok";
  std::string s = clause + " [";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "]";
}

std::size_t omega(std::span<const Interval> intervals) {
  std::vector<std::pair<Coord, int>> events;
  events.reserve(intervals.size() * 2);
  for (const Interval& iv : intervals) {
    events.emplace_back(iv.lo, 0);  // open sorts first at equal coordinate
    events.emplace_back(iv.hi, 1);
  }
  std::sort(events.begin(), events.end());
  std::size_t open = 0;
  std::size_t best = 0;
  for (const auto& [x, kind] : events) {
    if (kind == 0) {
      best = std::max(best, ++open);
    } else {
      --open;
    }
  }
  return best;
}

std::size_t omega_by_stabbing(std::span<const Interval> intervals) {
  std::size_t best = 0;
  for (const Interval& p : intervals) {
    for (Coord t : {p.lo, p.hi}) {
      std::size_t count = 0;
      for (const Interval& iv : intervals) count += iv.contains(t) ? 1 : 0;
      best = std::max(best, count);
    }
  }
  return best;
}

Level kt_level(std::span<const Interval> history, std::size_t i, std::span<const Level> prior_levels) {
  const Interval& cur = history[i];
  std::vector<std::pair<Interval, Level>> earlier;
  for (std::size_t j = 0; j < i; ++j) {
    if (history[j].intersects(cur)) earlier.emplace_back(history[j], prior_levels[j]);
  }
  for (Level r = 0;; ++r) {
    std::vector<Interval> sub;
    for (const auto& [iv, p] : earlier) {
      if (p <= r) sub.push_back(iv);
    }
    if (omega(sub) <= r) return r;
  }
}

std::vector<Level> kt_levels(std::span<const Interval> history) {
  std::vector<Level> p;
  p.reserve(history.size());
  for (std::size_t i = 0; i < history.size(); ++i) p.push_back(kt_level(history, i, p));
  return p;
}

std::vector<Color> kt_colors(std::span<const Interval> history) {
  const std::vector<Level> p = kt_levels(history);
  std::vector<Color> colors;
  colors.reserve(history.size());
  for (std::size_t i = 0; i < history.size(); ++i) {
    bool used[4] = {false, false, false, false};
    for (std::size_t j = 0; j < i; ++j) {
      if (p[j] == p[i] && history[j].intersects(history[i])) used[colors[j].offset] = true;
    }
    Offset o = 1;
    while (o <= 3 && used[o]) ++o;
    if (o > 3) throw std::logic_error("no free offset for interval " + std::to_string(history[i].id));
    colors.push_back({p[i], o});
  }
  return colors;
}

Level height_at(std::span<const Interval> intervals, Coord t) {
  std::vector<Level> levels;
  for (const Interval& iv : intervals) {
    if (iv.contains(t)) levels.push_back(iv.level);
  }
  return smallest_missing(levels);
}

CheckResult check_proper(std::span<const Interval> intervals) {
  const auto by_lo = sorted_by_lo(intervals);
  CheckResult result;
  for_each_intersecting_pair(by_lo, [&](const Interval& a, const Interval& b) {
    if (result.ok && a.color() == b.color()) {
      result = CheckResult::fail("intersecting intervals share color " + to_string(a.color()), {a.id, b.id});
    }
  });
  return result;
}

CheckResult check_property_p(std::span<const Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.offset < 1 || iv.offset > 3) return CheckResult::fail("offset outside {1,2,3}", {iv.id});
    if (iv.level == 0 && iv.offset != 1) return CheckResult::fail("level-0 interval with offset != 1", {iv.id});
  }
  const auto by_lo = sorted_by_lo(intervals);
  std::map<IntervalId, int> same_level_degree;
  CheckResult result;
  for_each_intersecting_pair(by_lo, [&](const Interval& a, const Interval& b) {
    if (!result.ok || a.level != b.level) return;
    if (a.level == 0) {
      result = CheckResult::fail("level 0 is not independent", {a.id, b.id});
      return;
    }
    const bool a_in_b = b.lo <= a.lo && a.hi <= b.hi;
    const bool b_in_a = a.lo <= b.lo && b.hi <= a.hi;
    if (a_in_b || b_in_a) {
      result = CheckResult::fail("containment at level " + std::to_string(a.level), {a.id, b.id});
      return;
    }
    for (IntervalId id : {a.id, b.id}) {
      if (++same_level_degree[id] > 2) {
        result = CheckResult::fail("more than two neighbours at level " + std::to_string(a.level), {id});
        return;
      }
    }
  });
  return result;
}

std::vector<IntervalId> invariant_c_violators(std::span<const Interval> intervals) {
  EndpointLevels el = endpoint_levels(intervals);
  const std::vector<Level> heights = endpoint_heights(el);
  std::vector<IntervalId> bad;
  for (const Interval& iv : intervals) {
    auto first = std::lower_bound(el.coords.begin(), el.coords.end(), iv.lo);
    auto last = std::upper_bound(el.coords.begin(), el.coords.end(), iv.hi);
    Level best = 0;
    for (auto it = first; it != last; ++it) best = std::max(best, heights[it - el.coords.begin()]);
    if (best < iv.level) bad.push_back(iv.id);
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

CheckResult check_invariant_c(std::span<const Interval> intervals) {
  auto bad = invariant_c_violators(intervals);
  if (bad.empty()) return CheckResult::pass();
  return CheckResult::fail("no endpoint inside the interval reaches its level", std::move(bad));
}

CheckResult check_invariant_c(const ColoringEngine& engine) {
  const std::vector<Interval> live = engine.intervals();
  CheckResult semantic = check_invariant_c(live);
  if (!semantic.ok) return semantic;

  std::map<Coord, std::uint32_t> refs;
  for (const Interval& iv : live) {
    ++refs[iv.lo];
    if (iv.hi != iv.lo) ++refs[iv.hi];
  }
  if (refs.size() != engine.endpoints().size()) {
    return CheckResult::fail("endpoint set size " + std::to_string(engine.endpoints().size()) +
                                 " != live endpoints " + std::to_string(refs.size()),
                             {});
  }
  EndpointLevels el = endpoint_levels(live);
  const std::vector<Level> heights = endpoint_heights(el);
  for (std::size_t k = 0; k < el.coords.size(); ++k) {
    const Coord t = el.coords[k];
    const SlsRecord* rec = engine.endpoints().find(t);
    if (rec == nullptr) return CheckResult::fail("endpoint " + std::to_string(t) + " missing", {});
    if (rec->refcount() != refs[t]) {
      return CheckResult::fail("endpoint " + std::to_string(t) + " refcount mismatch", {});
    }
    std::vector<Level> expect = el.levels[k];
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    if (rec->occupied() != expect) {
      return CheckResult::fail("endpoint " + std::to_string(t) + " occupied levels differ from live levels", {});
    }
    if (rec->height() != heights[k]) {
      return CheckResult::fail("endpoint " + std::to_string(t) + " height mismatch", {});
    }
    std::vector<Level> tracked = rec->occupied();
    const std::vector<Level> vacant = rec->vacant_below();
    tracked.insert(tracked.end(), vacant.begin(), vacant.end());
    std::sort(tracked.begin(), tracked.end());
    for (std::size_t i = 0; i < tracked.size(); ++i) {
      if (tracked[i] != i) {
        return CheckResult::fail("endpoint " + std::to_string(t) + " tracked levels have a gap", {});
      }
    }
  }
  return CheckResult::pass();
}

std::size_t distinct_colors(std::span<const Interval> intervals) {
  std::set<Color> colors;
  for (const Interval& iv : intervals) colors.insert(iv.color());
  return colors.size();
}

CheckResult check_color_bound(std::span<const Interval> intervals) {
  const auto w = static_cast<long long>(omega(intervals));
  const auto used = static_cast<long long>(distinct_colors(intervals));
  if (intervals.empty() || used <= 3 * w - 2) return CheckResult::pass();
  return CheckResult::fail(std::to_string(used) + " colors exceed 3*" + std::to_string(w) + "-2", {});
}

CheckResult check_level_domination(std::span<const Interval> history) {
  const std::vector<Level> p = kt_levels(history);
  std::vector<IntervalId> bad;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (history[i].level > p[i]) bad.push_back(history[i].id);
  }
  if (bad.empty()) return CheckResult::pass();
  return CheckResult::fail("level exceeds Kierstead-Trotter level", std::move(bad));
}

CheckResult check_stepwise_domination(std::span<const Interval> history) {
  std::vector<Level> prior;
  prior.reserve(history.size());
  std::vector<IntervalId> bad;
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (history[i].level > kt_level(history, i, prior)) bad.push_back(history[i].id);
    prior.push_back(history[i].level);
  }
  if (bad.empty()) return CheckResult::pass();
  return CheckResult::fail("level exceeds Kierstead-Trotter rule on engine levels", std::move(bad));
}

}  // namespace dic::oracle
