#pragma once

// Plain-list reference for interval_index, shared by the unit and
// acceptance suites.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dic/interval_index.hpp"

namespace dic::test {

inline std::vector<IntervalId> list_intersection(const std::vector<Interval>& list, Coord a, Coord b) {
  std::vector<IntervalId> out;
  for (const Interval& iv : list) {
    if (std::max(iv.lo, a) <= std::min(iv.hi, b)) out.push_back(iv.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random insert/delete/query mix against the list.  Returns a description
// of the first disagreement, empty when none.
inline std::string run_index_vs_list(std::uint64_t seed, std::size_t ops, Coord coord_range, Coord max_len) {
  std::mt19937_64 rng(seed);
  auto draw = [&](Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); };
  IntervalIndex<Interval> idx;
  std::vector<Interval> list;
  IntervalId next = 1;
  for (std::size_t k = 0; k < ops; ++k) {
    const auto roll = draw(0, 9);
    if (roll < 4 || list.empty()) {
      const Coord lo = draw(-coord_range, coord_range);
      const Coord hi = lo + draw(0, max_len);
      Interval iv{next++, lo, hi};
      idx.insert(iv);
      list.push_back(iv);
    } else if (roll < 6) {
      const auto pick = static_cast<std::size_t>(draw(0, static_cast<Coord>(list.size()) - 1));
      const Interval gone = idx.erase(list[pick].id);
      if (!(gone == list[pick])) return "op " + std::to_string(k) + ": erase returned a different interval";
      list[pick] = list.back();
      list.pop_back();
    } else {
      const Coord a = draw(-coord_range - max_len, coord_range + max_len);
      const Coord b = a + draw(0, 2 * max_len);
      std::vector<IntervalId> got;
      for (const Interval& iv : idx.intersection(a, b)) got.push_back(iv.id);
      std::sort(got.begin(), got.end());
      if (got != list_intersection(list, a, b)) {
        return "op " + std::to_string(k) + ": query [" + std::to_string(a) + "," + std::to_string(b) + "] differs";
      }
    }
    if (idx.size() != list.size()) return "op " + std::to_string(k) + ": size differs";
  }
  if (!idx.check_structure()) return "tree structure invalid";
  return {};
}

}  // namespace dic::test
