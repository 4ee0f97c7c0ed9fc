#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lozenge/error.hpp"

using namespace lozenge;
using namespace lozenge::testing;

TEST_CASE("unit hexagon has exactly two tilings") {
  DomainPtr d = unit_hexagon();
  auto by_flips = all_tilings_by_flips(d);
  auto by_cover = all_tilings_by_cover_search(d);
  CHECK(by_flips.size() == 2);
  CHECK(tiling_set(by_flips) == tiling_set(by_cover));
  for (const Tiling& t : by_flips) CHECK(t.lozenges().size() == 3);
}

TEST_CASE("peeling matches exhaustive extremes and counts placements") {
  for (DomainPtr d : {unit_hexagon(), hexagon(2, 2, 2), dumbbell(),
                      pseudo_hexagon({{2, 1}, {1, 0}})}) {
    PeelStats stats;
    Tiling lo = extremal_tiling(d, Extremal::Minimal, &stats);
    CHECK(stats.placements ==
          static_cast<long>(d->triangles().size()) / 2);
    Tiling hi = extremal_tiling(d, Extremal::Maximal, &stats);
    CHECK(stats.placements ==
          static_cast<long>(d->triangles().size()) / 2);
    for (const Tiling& t : all_tilings_by_flips(d)) {
      Cmp up = compare(lo.heights, t.heights);
      CHECK((up == Cmp::Less || up == Cmp::Equal));
      Cmp dn = compare(t.heights, hi.heights);
      CHECK((dn == Cmp::Less || dn == Cmp::Equal));
    }
  }
}

TEST_CASE("untileable domains are reported") {
  DomainPtr butterfly = enclose(trace(parse_contour("bccaBCCA"), {0, 0}));
  CHECK_THROWS_AS(extremal_tiling(butterfly, Extremal::Minimal), Error);
  CHECK(all_tilings_by_flips(butterfly).empty());
  CHECK(all_tilings_by_cover_search(butterfly).empty());

  DomainPtr lone = Domain::from_triangles({Triangle{true, {0, 0}}});
  CHECK_THROWS_AS(extremal_tiling(lone, Extremal::Minimal), Error);
}

TEST_CASE("the two exhaustive searches agree on known counts") {
  CHECK(all_tilings_by_cover_search(hexagon(2, 2, 1)).size() == 6);
  CHECK(all_tilings_by_cover_search(hexagon(2, 2, 2)).size() == 20);
  CHECK(all_tilings_by_cover_search(pseudo_hexagon({{2, 1}, {1, 0}})).size()
        == 9);
  CHECK(all_tilings_by_flips(hexagon(2, 2, 2)).size() == 20);
}

TEST_CASE("exhaustive searches agree on small hexagons and random domains") {
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y)
      for (int z = 1; z <= 2; ++z) {
        DomainPtr d = hexagon(x, y, z);
        CHECK(tiling_set(all_tilings_by_flips(d)) ==
              tiling_set(all_tilings_by_cover_search(d)));
      }
  std::mt19937 rng(20260824);
  for (int i = 0; i < 25; ++i) {
    DomainPtr d = random_compact_domain(rng);
    CHECK(tiling_set(all_tilings_by_flips(d)) ==
          tiling_set(all_tilings_by_cover_search(d)));
  }
}

TEST_CASE("moves change one height by three and are involutive") {
  DomainPtr d = hexagon(2, 2, 2);
  for (const Tiling& t : all_tilings_by_flips(d))
    for (FlipDir dir : {FlipDir::Up, FlipDir::Down})
      for (int vi : flippable_vertices(t, dir)) {
        Tiling u = flip(t, vi);
        validate(u.heights);
        CHECK(distance(t.heights, u.heights) == 1);
        CHECK(std::abs(u.heights.values[vi] - t.heights.values[vi]) == 3);
        CHECK(flip(u, vi) == t);
      }
  // Boundary vertices are never movable.
  Tiling lo = extremal_tiling(d, Extremal::Minimal);
  CHECK_THROWS_AS(flip(lo, d->vertex_index(d->start())), Error);
}

TEST_CASE("tilings round-trip through lozenge lists") {
  for (DomainPtr d : {unit_hexagon(), hexagon(2, 2, 2), dumbbell()}) {
    for (const Tiling& t : all_tilings_by_flips(d)) {
      Tiling again = tiling_from_lozenges(d, t.lozenges());
      CHECK(again == t);
    }
    // Dropping one lozenge is not a tiling.
    Tiling lo = extremal_tiling(d, Extremal::Minimal);
    auto ls = lo.lozenges();
    ls.pop_back();
    CHECK_THROWS_AS(tiling_from_lozenges(d, ls), Error);
  }
}
