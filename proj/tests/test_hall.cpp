#include <doctest.h>

#include <set>

#include "gcx/brute.hpp"
#include "gcx/hall.hpp"
#include "gcx/rng.hpp"

using namespace gcx;

namespace {

HallInstance inst_of(std::vector<int> palette, std::vector<std::vector<int>> lists) {
  return HallInstance{std::move(palette), std::move(lists)};
}

HallInstance random_instance(Rng& rng, int max_lists, int max_palette) {
  const int p = rng.uniform_int(1, max_palette);
  const int r = rng.uniform_int(0, max_lists);
  HallInstance inst;
  for (int c = 0; c < p; ++c) inst.palette.push_back(c);
  for (int i = 0; i < r; ++i) {
    inst.lists.push_back(rng.sample_indices(p, rng.uniform_int(1, std::min(p, 4))));
  }
  return inst;
}

}  // namespace

TEST_CASE("solve_sdr on the stated examples") {
  // colors: a=0, b=1
  const HallResult forced = solve_sdr(inst_of({0, 1}, {{0, 1}, {1}}));
  REQUIRE(forced.feasible);
  CHECK(forced.sdr == std::vector<int>{0, 1});

  const HallResult collide = solve_sdr(inst_of({0, 1}, {{0}, {0}}));
  REQUIRE_FALSE(collide.feasible);
  CHECK(collide.violator == std::vector<int>{0, 1});

  const HallResult triple = solve_sdr(inst_of({0, 1}, {{0, 1}, {1}, {0}}));
  REQUIRE_FALSE(triple.feasible);
  CHECK(triple.violator == std::vector<int>{0, 1, 2});
}

TEST_CASE("feasibility on the stated examples") {
  CHECK(is_hall_feasible(inst_of({0, 1}, {})));  // empty family
  CHECK(is_hall_feasible(inst_of({0, 1, 2}, {{0}, {1}, {2}})));
  CHECK_FALSE(is_hall_feasible(inst_of({0, 1}, {{0}, {0}})));
  CHECK_THROWS_WITH(solve_sdr(inst_of({0}, {{3}})), "list color outside palette");
}

TEST_CASE("minimum violator search") {
  const auto smallest = min_violator(inst_of({0, 1, 2}, {{0}, {0}, {0, 1, 2}}));
  REQUIRE(smallest.has_value());
  CHECK(*smallest == std::vector<int>{0, 1});

  CHECK_FALSE(min_violator(inst_of({0, 1}, {{0}, {1}})).has_value());

  const auto triple = min_violator(inst_of({0, 1}, {{0, 1}, {0, 1}, {0, 1}}));
  REQUIRE(triple.has_value());
  CHECK(*triple == std::vector<int>{0, 1, 2});

  HallInstance big;
  big.palette = {0};
  big.lists.assign(21, {0});
  CHECK_THROWS_WITH(min_violator(big).has_value(), "exhaustive violator search out of range");
}

TEST_CASE("matching size equals lists minus maximum deficiency") {
  Rng rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const HallInstance inst = random_instance(rng, 12, 8);
    const HallResult res = solve_sdr(inst);
    const int deficiency = brute::hall_max_deficiency(inst.lists);
    CHECK(res.feasible == (deficiency == 0));
    if (res.feasible) {
      std::set<int> seen;
      for (std::size_t i = 0; i < inst.lists.size(); ++i) {
        CHECK(std::binary_search(inst.lists[i].begin(), inst.lists[i].end(), res.sdr[i]));
        CHECK(seen.insert(res.sdr[i]).second);
      }
    } else {
      std::set<int> uni;
      for (int i : res.violator) uni.insert(inst.lists[i].begin(), inst.lists[i].end());
      CHECK(static_cast<int>(uni.size()) < static_cast<int>(res.violator.size()));
      // the extracted violator witnesses the maximum deficiency
      CHECK(static_cast<int>(res.violator.size()) - static_cast<int>(uni.size()) == deficiency);
      const auto smallest = min_violator(inst);
      REQUIRE(smallest.has_value());
      std::set<int> uni2;
      for (int i : *smallest) uni2.insert(inst.lists[i].begin(), inst.lists[i].end());
      CHECK(static_cast<int>(uni2.size()) < static_cast<int>(smallest->size()));
    }
  }
}

TEST_CASE("adding a color never breaks feasibility") {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    HallInstance inst = random_instance(rng, 8, 8);
    if (inst.lists.empty() || !is_hall_feasible(inst)) continue;
    const int i = rng.uniform_int(0, static_cast<int>(inst.lists.size()) - 1);
    const int c = inst.palette[rng.uniform_int(0, static_cast<int>(inst.palette.size()) - 1)];
    inst.lists[i] = sorted_unique([&] {
      auto copy = inst.lists[i];
      copy.push_back(c);
      return copy;
    }());
    CHECK(is_hall_feasible(inst));
    ++checked;
  }
  CHECK(checked > 0);
}
