#include "dic/update_verifier.hpp"

#include <algorithm>
#include <limits>

namespace dic::oracle {

namespace {

Coord saturating_sub(Coord a, Coord b) {
  if (a < std::numeric_limits<Coord>::min() + b) return std::numeric_limits<Coord>::min();
  return a - b;
}

// Offending ids kept per clause; enough to locate a failure by hand.
constexpr std::size_t kMaxIds = 64;

void note(CheckResult& r, std::string_view clause, std::initializer_list<IntervalId> ids) {
  if (r.ok) {
    r.ok = false;
    r.clause = clause;
  }
  if (r.ids.size() < kMaxIds) r.ids.insert(r.ids.end(), ids);
}

void finish(CheckResult& r) {
  std::sort(r.ids.begin(), r.ids.end());
  r.ids.erase(std::unique(r.ids.begin(), r.ids.end()), r.ids.end());
}

// Sweeps j's neighbourhood (every interval stabbing a point of j meets j)
// and reports whether some endpoint inside j sees all levels below j's.
bool has_witness(const Interval& j, const std::vector<const Interval*>& nb, std::vector<std::pair<Coord, int>>& sweep,
                 std::vector<std::size_t>& counts) {
  sweep.clear();
  for (const Interval* o : nb) {
    if (o->level >= j.level) continue;
    sweep.emplace_back(std::max(o->lo, j.lo), static_cast<int>(o->level));
    sweep.emplace_back(std::min(o->hi, j.hi), -1 - static_cast<int>(o->level));
  }
  // Opens carry the level, closes -1-level.  Each coordinate is handled as
  // opens, test, closes since the intervals are closed.
  std::sort(sweep.begin(), sweep.end());
  counts.assign(j.level, 0);
  Level covered = 0;
  for (std::size_t i = 0; i < sweep.size();) {
    std::size_t end = i;
    while (end < sweep.size() && sweep[end].first == sweep[i].first) ++end;
    for (std::size_t k = i; k < end; ++k) {
      if (sweep[k].second >= 0 && counts[sweep[k].second]++ == 0) ++covered;
    }
    if (covered == j.level) return true;
    for (std::size_t k = i; k < end; ++k) {
      if (sweep[k].second < 0 && --counts[-1 - sweep[k].second] == 0) --covered;
    }
    i = end;
  }
  return false;
}

}  // namespace

bool StateChecks::ok() const { return first_failure() == nullptr; }

const CheckResult* StateChecks::first_failure() const {
  for (const CheckResult* r : {&proper, &property_p, &invariant_c, &color_bound, &sync}) {
    if (!r->ok) return r;
  }
  return nullptr;
}

UpdateVerifier::UpdateVerifier(const ColoringEngine& engine) : engine_(&engine) { rebuild(); }

const Interval* UpdateVerifier::mirrored(IntervalId id) const {
  auto it = lo_of_.find(id);
  return it == lo_of_.end() ? nullptr : &by_lo_.at({it->second, id});
}

Interval* UpdateVerifier::mirrored(IntervalId id) {
  auto it = lo_of_.find(id);
  return it == lo_of_.end() ? nullptr : &by_lo_.at({it->second, id});
}

void UpdateVerifier::add(const Interval& iv) {
  by_lo_.emplace(std::pair{iv.lo, iv.id}, iv);
  lo_of_[iv.id] = iv.lo;
  max_len_ = std::max(max_len_, iv.hi - iv.lo);
  ++color_counts_[iv.color()];
}

void UpdateVerifier::forget(IntervalId id) {
  auto it = lo_of_.find(id);
  if (it == lo_of_.end()) return;
  auto node = by_lo_.find({it->second, id});
  auto c = color_counts_.find(node->second.color());
  if (--c->second == 0) color_counts_.erase(c);
  by_lo_.erase(node);
  lo_of_.erase(it);
}

bool UpdateVerifier::refresh(IntervalId id) {
  const Interval* now = engine_->find(id);
  if (now == nullptr) return false;
  Interval& mine = *mirrored(id);
  if (mine.color() != now->color()) {
    auto c = color_counts_.find(mine.color());
    if (--c->second == 0) color_counts_.erase(c);
    mine.level = now->level;
    mine.offset = now->offset;
    ++color_counts_[mine.color()];
  }
  return true;
}

std::vector<const Interval*> UpdateVerifier::meeting(Coord a, Coord b) const {
  std::vector<const Interval*> out;
  for (auto it = by_lo_.lower_bound({saturating_sub(a, max_len_), 0}); it != by_lo_.end() && it->first.first <= b; ++it) {
    if (it->second.hi >= a) out.push_back(&it->second);
  }
  return out;
}

void UpdateVerifier::collect_region(Coord a, Coord b, std::vector<IntervalId>& out) const {
  for (const Interval* iv : meeting(a, b)) out.push_back(iv->id);
}

void UpdateVerifier::rebuild() {
  by_lo_.clear();
  lo_of_.clear();
  color_counts_.clear();
  max_len_ = 0;
  std::vector<Interval> live = engine_->intervals();
  for (const Interval& iv : live) add(iv);
  omega_floor_ = omega(live);
}

StateChecks UpdateVerifier::after_insert(IntervalId id) {
  const Interval* iv = engine_->find(id);
  if (iv == nullptr) {
    StateChecks out;
    note(out.sync, "inserted interval missing from engine", {id});
    return out;
  }
  add(*iv);
  std::vector<IntervalId> region;
  collect_region(iv->lo, iv->hi, region);
  return check_region(std::move(region), {});
}

StateChecks UpdateVerifier::after_remove(IntervalId id, std::span<const Recolor> recolored) {
  std::vector<IntervalId> lost;
  if (engine_->find(id) != nullptr) lost.push_back(id);
  std::vector<IntervalId> region;
  if (const Interval* gone = mirrored(id); gone != nullptr) {
    const Interval removed = *gone;
    forget(id);
    collect_region(removed.lo, removed.hi, region);
    // One interval fewer lowers the clique number by at most one.
    if (omega_floor_ > 0) --omega_floor_;
  }
  for (const Recolor& r : recolored) {
    const Interval* iv = mirrored(r.id);
    if (iv == nullptr) {
      lost.push_back(r.id);
      continue;
    }
    collect_region(iv->lo, iv->hi, region);
  }
  return check_region(std::move(region), std::move(lost));
}

StateChecks UpdateVerifier::check_region(std::vector<IntervalId> region, std::vector<IntervalId> lost) {
  StateChecks out;
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  for (IntervalId id : region) {
    if (!refresh(id)) lost.push_back(id);
  }
  for (IntervalId id : lost) note(out.sync, "engine and observed updates disagree", {id});

  std::vector<std::pair<Coord, int>> sweep;
  std::vector<std::size_t> counts;
  for (IntervalId id : region) {
    const Interval& j = *mirrored(id);
    const auto nb = meeting(j.lo, j.hi);

    std::size_t same_level = 0;
    std::size_t at_lo = 0;
    for (const Interval* o : nb) {
      if (o->contains(j.lo)) ++at_lo;
      if (o->id == j.id) continue;
      if (o->color() == j.color()) note(out.proper, "intersecting intervals share a color", {j.id, o->id});
      if (o->level != j.level) continue;
      ++same_level;
      if (j.level == 0) {
        note(out.property_p, "level 0 is not independent", {j.id, o->id});
      } else if ((o->lo <= j.lo && j.hi <= o->hi) || (j.lo <= o->lo && o->hi <= j.hi)) {
        note(out.property_p, "containment inside a level", {j.id, o->id});
      }
    }
    omega_floor_ = std::max(omega_floor_, at_lo);
    if (j.offset < 1 || j.offset > 3 || (j.level == 0 && j.offset != 1)) {
      note(out.property_p, "offset out of range", {j.id});
    }
    if (j.level > 0 && same_level > 2) note(out.property_p, "more than two neighbours at one level", {j.id});

    if (j.level == 0) continue;
    if (!has_witness(j, nb, sweep, counts)) note(out.invariant_c, "no endpoint of sufficient height", {j.id});
  }

  const std::size_t colors = color_counts_.size();
  if (colors > 0 && colors + 2 > 3 * omega_floor_) {
    std::vector<Interval> all;
    all.reserve(by_lo_.size());
    for (const auto& [key, iv] : by_lo_) all.push_back(iv);
    omega_floor_ = omega(all);
    if (colors + 2 > 3 * omega_floor_) out.color_bound = CheckResult::fail("more than 3*omega-2 colors", {});
  }

  for (CheckResult* r : {&out.proper, &out.property_p, &out.invariant_c, &out.sync}) finish(*r);
  return out;
}

StateChecks UpdateVerifier::full() {
  StateChecks out;
  const std::vector<Interval> live = engine_->intervals();
  std::vector<IntervalId> drift;
  for (const Interval& iv : live) {
    const Interval* mine = mirrored(iv.id);
    if (mine == nullptr || !(*mine == iv)) drift.push_back(iv.id);
  }
  if (live.size() != by_lo_.size()) {
    for (const auto& [key, iv] : by_lo_) {
      if (engine_->find(iv.id) == nullptr) drift.push_back(iv.id);
    }
  }
  for (IntervalId id : drift) note(out.sync, "engine and observed updates disagree", {id});
  finish(out.sync);

  out.proper = check_proper(live);
  out.property_p = check_property_p(live);
  out.invariant_c = check_invariant_c(*engine_);
  out.color_bound = check_color_bound(live);
  rebuild();
  return out;
}

}  // namespace dic::oracle
