#include <doctest.h>

#include "fixtures.hpp"
#include "lozenge/error.hpp"
#include "lozenge/tiling.hpp"

using namespace lozenge;
using namespace lozenge::testing;

TEST_CASE("unit hexagon boundary heights alternate 0,1") {
  DomainPtr d = unit_hexagon();
  BoundaryHeights bh = boundary_heights(d);
  CHECK(bh.consistent);
  int expect = 0;
  for (Vertex v : d->boundary()) {
    REQUIRE(bh.h[d->vertex_index(v)].has_value());
    CHECK(*bh.h[d->vertex_index(v)] == expect);
    expect = 1 - expect;
  }
  // The centre is interior, hence unassigned.
  CHECK(!bh.h[d->vertex_index({0, 0})].has_value());
}

TEST_CASE("butterfly boundary heights are inconsistent") {
  DomainPtr d = enclose(trace(parse_contour("bccaBCCA"), {0, 0}));
  CHECK(!boundary_heights(d).consistent);
}

TEST_CASE("heights are congruent to colours mod 3") {
  for (DomainPtr d : {unit_hexagon(), hexagon(2, 2, 2), dumbbell()}) {
    Tiling t = extremal_tiling(d, Extremal::Minimal);
    int base = color(d->start());
    for (size_t i = 0; i < d->vertices().size(); ++i) {
      int want = ((color(d->vertices()[i]) - base) % 3 + 3) % 3;
      CHECK(((t.heights.values[i] % 3) + 3) % 3 == want);
    }
  }
}

TEST_CASE("compare, min, max and distance behave like a lattice metric") {
  DomainPtr d = unit_hexagon();
  Tiling lo = extremal_tiling(d, Extremal::Minimal);
  Tiling hi = extremal_tiling(d, Extremal::Maximal);
  CHECK(compare(lo.heights, hi.heights) == Cmp::Less);
  CHECK(compare(hi.heights, lo.heights) == Cmp::Greater);
  CHECK(compare(lo.heights, lo.heights) == Cmp::Equal);
  CHECK(pointwise_min(lo.heights, hi.heights) == lo.heights);
  CHECK(pointwise_max(lo.heights, hi.heights) == hi.heights);
  // One move apart: the centre differs by 3.
  CHECK(distance(lo.heights, hi.heights) == 1);
  int c = d->vertex_index({0, 0});
  CHECK(lo.heights.values[c] == -1);
  CHECK(hi.heights.values[c] == 2);
}

TEST_CASE("distance between extremal tilings is the box volume") {
  DomainPtr box = hexagon(2, 2, 2);
  CHECK(distance(extremal_tiling(box, Extremal::Minimal).heights,
                 extremal_tiling(box, Extremal::Maximal).heights) == 8);
  DomainPtr slab = hexagon(2, 3, 1);
  CHECK(distance(extremal_tiling(slab, Extremal::Minimal).heights,
                 extremal_tiling(slab, Extremal::Maximal).heights) == 6);
}

TEST_CASE("validate rejects tampered height functions") {
  DomainPtr d = unit_hexagon();
  HeightFunction h = extremal_tiling(d, Extremal::Minimal).heights;
  validate(h);
  HeightFunction bad = h;
  bad.values[d->vertex_index({0, 0})] += 1;  // breaks mod-3 edge differences
  CHECK_THROWS_AS(validate(bad), Error);
  HeightFunction shifted = h;
  for (int& v : shifted.values) ++v;  // moves the base off 0
  CHECK_THROWS_AS(validate(shifted), Error);
}
