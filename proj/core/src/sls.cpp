#include "dic/sls.hpp"

#include <algorithm>
#include <string>

namespace dic {

// ---- IncrementalSls -------------------------------------------------------

bool IncrementalSls::occupied(Level l) const {
  if (l >= ceiling_) return false;
  return (bits_[l / 64] >> (l % 64)) & 1U;
}

void IncrementalSls::grow_to_fit(Level l) {
  if (l < capacity_) return;
  std::size_t cap = capacity_ == 0 ? 1 : capacity_;
  while (cap <= l) cap *= 2;
  capacity_ = cap;
  bits_.resize((cap + 63) / 64, 0);
  next_.resize(cap, kNil);
  prev_.resize(cap, kNil);
}

// Levels enter the free list in increasing order, so appending keeps it sorted.
void IncrementalSls::append_free(Level l) {
  const auto s = static_cast<std::int32_t>(l);
  prev_[l] = tail_;
  next_[l] = kNil;
  if (tail_ != kNil) {
    next_[tail_] = s;
  } else {
    head_ = s;
  }
  tail_ = s;
}

void IncrementalSls::unlink_free(Level l) {
  const std::int32_t p = prev_[l];
  const std::int32_t n = next_[l];
  if (p != kNil) {
    next_[p] = n;
  } else {
    head_ = n;
  }
  if (n != kNil) {
    prev_[n] = p;
  } else {
    tail_ = p;
  }
  prev_[l] = next_[l] = kNil;
}

void IncrementalSls::mark(Level l) {
  if (l >= ceiling_) {
    grow_to_fit(l);
    for (Level q = ceiling_; q < l; ++q) append_free(q);
    ceiling_ = l + 1;
  } else if (occupied(l)) {
    return;
  } else {
    unlink_free(l);
  }
  bits_[l / 64] |= std::uint64_t{1} << (l % 64);
}

std::vector<Level> IncrementalSls::occupied_levels() const {
  std::vector<Level> out;
  for (Level l = 0; l < ceiling_; ++l) {
    if (occupied(l)) out.push_back(l);
  }
  return out;
}

std::vector<Level> IncrementalSls::vacant_levels() const {
  std::vector<Level> out;
  for (std::int32_t s = head_; s != kNil; s = next_[s]) out.push_back(static_cast<Level>(s));
  return out;
}

// ---- DynamicSls -----------------------------------------------------------

Level DynamicSls::height() const {
  if (!vacant_.empty()) return *vacant_.begin();
  if (!occupied_.empty()) return *occupied_.rbegin() + 1;
  return 0;
}

Level DynamicSls::ceiling() const {
  Level c = 0;
  if (!occupied_.empty()) c = std::max(c, *occupied_.rbegin() + 1);
  if (!vacant_.empty()) c = std::max(c, *vacant_.rbegin() + 1);
  return c;
}

void DynamicSls::mark(Level l) {
  if (occupied_.count(l) != 0) return;
  for (Level q = ceiling(); q < l; ++q) vacant_.insert(vacant_.end(), q);
  vacant_.erase(l);
  occupied_.insert(l);
}

void DynamicSls::unmark(Level l) {
  if (occupied_.erase(l) == 0) {
    throw Error(Errc::NotMarked, "level " + std::to_string(l) + " is not occupied");
  }
  vacant_.insert(l);
}

// ---- SlsRecord --------------------------------------------------------------

SlsRecord::SlsRecord(Coord coord, SlsMode mode)
    : coord_(coord),
      mode_(mode),
      backend_(mode == SlsMode::Incremental ? std::variant<IncrementalSls, DynamicSls>(IncrementalSls{})
                                            : std::variant<IncrementalSls, DynamicSls>(DynamicSls{})) {}

SlsRecord SlsRecord::build(Coord coord, SlsMode mode, std::span<const Level> levels_present) {
  std::vector<Level> sorted(levels_present.begin(), levels_present.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SlsRecord rec(coord, mode);
  // Marking in ascending order pads exactly the missing levels below the max.
  for (Level l : sorted) rec.mark(l);
  return rec;
}

Level SlsRecord::height() const {
  return std::visit([](const auto& b) { return b.height(); }, backend_);
}

Level SlsRecord::ceiling() const {
  return std::visit([](const auto& b) { return b.ceiling(); }, backend_);
}

bool SlsRecord::is_occupied(Level l) const {
  return std::visit([l](const auto& b) { return b.occupied(l); }, backend_);
}

void SlsRecord::mark(Level l) {
  std::visit([l](auto& b) { b.mark(l); }, backend_);
}

void SlsRecord::unmark(Level l) {
  auto* dyn = std::get_if<DynamicSls>(&backend_);
  if (dyn == nullptr) {
    throw Error(Errc::ModeViolation, "unmark on an incremental record at " + std::to_string(coord_));
  }
  dyn->unmark(l);
}

std::vector<Level> SlsRecord::occupied() const {
  return std::visit([](const auto& b) { return b.occupied_levels(); }, backend_);
}

std::vector<Level> SlsRecord::vacant_below() const {
  return std::visit([](const auto& b) { return b.vacant_levels(); }, backend_);
}

}  // namespace dic
