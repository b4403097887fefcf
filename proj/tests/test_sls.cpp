#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "dic/sls.hpp"

using dic::Errc;
using dic::Error;
using dic::Level;
using dic::SlsMode;
using dic::SlsRecord;
using Levels = std::vector<Level>;

namespace {

constexpr SlsMode kBoth[] = {SlsMode::Incremental, SlsMode::Dynamic};

Level scan_height(const std::set<Level>& occupied) {
  Level y = 0;
  while (occupied.count(y) != 0) ++y;
  return y;
}

bool tracked_prefix_is_gap_free(const SlsRecord& rec) {
  Levels all = rec.occupied();
  const Levels vac = rec.vacant_below();
  all.insert(all.end(), vac.begin(), vac.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) return false;
  }
  return all.size() == rec.ceiling();
}

}  // namespace

TEST_CASE("build") {
  for (SlsMode mode : kBoth) {
    CAPTURE(dic::to_string(mode));
    const Levels none;
    CHECK(SlsRecord::build(0, mode, none).height() == 0);

    const Levels ground = {0, 1};
    const SlsRecord two = SlsRecord::build(4, mode, ground);
    CHECK(two.height() == 2);
    CHECK(two.vacant_below().empty());

    const Levels only_one = {1};
    const SlsRecord r = SlsRecord::build(7, mode, only_one);
    CHECK(r.vacant_below() == Levels{0});
    CHECK(r.height() == 0);

    const Levels dup = {2, 0, 2};
    const SlsRecord d = SlsRecord::build(1, mode, dup);
    CHECK(d.occupied() == Levels{0, 2});
    CHECK(d.vacant_below() == Levels{1});
    CHECK(d.height() == 1);
  }
}

TEST_CASE("height") {
  for (SlsMode mode : kBoth) {
    CAPTURE(dic::to_string(mode));
    CHECK(SlsRecord(0, mode).height() == 0);
    const Levels full = {0, 1, 2};
    CHECK(SlsRecord::build(0, mode, full).height() == 3);
    const Levels gap = {0, 2};
    CHECK(SlsRecord::build(0, mode, gap).height() == 1);
  }
}

TEST_CASE("mark") {
  for (SlsMode mode : kBoth) {
    CAPTURE(dic::to_string(mode));
    SlsRecord rec(0, mode);
    rec.mark(0);
    CHECK(rec.occupied() == Levels{0});
    CHECK(rec.height() == 1);

    rec.mark(3);
    CHECK(rec.vacant_below() == Levels{1, 2});
    CHECK(rec.height() == 1);

    rec.mark(3);
    CHECK(rec.occupied() == Levels{0, 3});
    CHECK(rec.vacant_below() == Levels{1, 2});
    CHECK(tracked_prefix_is_gap_free(rec));
  }
}

TEST_CASE("unmark") {
  const Levels ground = {0, 1};
  SlsRecord rec = SlsRecord::build(0, SlsMode::Dynamic, ground);
  rec.unmark(0);
  CHECK(rec.height() == 0);

  SlsRecord inc = SlsRecord::build(0, SlsMode::Incremental, ground);
  try {
    inc.unmark(0);
    FAIL("expected ModeViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ModeViolation);
  }

  const Levels three = {0, 1, 2};
  SlsRecord rt = SlsRecord::build(0, SlsMode::Dynamic, three);
  rt.unmark(1);
  CHECK(rt.height() == 1);
  rt.mark(1);
  CHECK(rt.height() == 3);

  try {
    rt.unmark(7);
    FAIL("expected NotMarked");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMarked);
  }
}

TEST_CASE("ceiling never shrinks after unmarking the top level") {
  const Levels three = {0, 1, 2};
  SlsRecord rec = SlsRecord::build(0, SlsMode::Dynamic, three);
  rec.unmark(2);
  CHECK(rec.ceiling() == 3);
  CHECK(rec.vacant_below() == Levels{2});
  CHECK(rec.height() == 2);
}

TEST_CASE("incremental storage doubles") {
  SlsRecord rec(0, SlsMode::Incremental);
  dic::IncrementalSls raw;
  std::vector<std::size_t> caps;
  for (Level l = 0; l < 40; ++l) {
    raw.mark(l);
    if (caps.empty() || caps.back() != raw.capacity()) caps.push_back(raw.capacity());
  }
  CHECK(caps == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64});
  CHECK(raw.height() == 40);
  CHECK(raw.ceiling() == 40);
}

TEST_CASE("random mark/unmark against a linear-scan height") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Level> level(0, 24);
  SlsRecord rec(0, SlsMode::Dynamic);
  std::set<Level> occupied;
  bool ok = true;
  for (int k = 0; k < 100000 && ok; ++k) {
    const Level l = level(rng);
    if (occupied.count(l) != 0 && (rng() & 1U) != 0) {
      rec.unmark(l);
      occupied.erase(l);
    } else {
      rec.mark(l);
      occupied.insert(l);
    }
    ok = rec.height() == scan_height(occupied);
    if (k % 997 == 0) ok = ok && tracked_prefix_is_gap_free(rec);
  }
  CHECK(ok);
  CHECK(tracked_prefix_is_gap_free(rec));
}

TEST_CASE("backends agree on mark-only workloads") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Level> level(0, 60);
  for (int trial = 0; trial < 200; ++trial) {
    SlsRecord a(0, SlsMode::Incremental);
    SlsRecord b(0, SlsMode::Dynamic);
    bool same = true;
    for (int k = 0; k < 50; ++k) {
      const Level l = level(rng) / static_cast<Level>(1 + (k % 3));
      a.mark(l);
      b.mark(l);
      same = same && a.height() == b.height() && a.occupied() == b.occupied() &&
             a.vacant_below() == b.vacant_below();
    }
    CHECK(same);
  }
}

TEST_CASE("refcount") {
  SlsRecord rec(5, SlsMode::Dynamic);
  CHECK(rec.refcount() == 0);
  rec.acquire();
  rec.acquire();
  CHECK(rec.release() == 1);
  CHECK(rec.coord() == 5);
}
