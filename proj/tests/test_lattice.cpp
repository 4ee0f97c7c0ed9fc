#include <doctest.h>

#include "fixtures.hpp"
#include "lozenge/error.hpp"
#include "lozenge/fracture.hpp"
#include "lozenge/lattice.hpp"

using namespace lozenge;
using namespace lozenge::testing;

namespace {

bool leq(const Tiling& a, const Tiling& b) {
  Cmp c = compare(a.heights, b.heights);
  return c == Cmp::Less || c == Cmp::Equal;
}

// Exhaustive check that inf/sup are greatest lower / least upper bounds.
void check_lattice_laws(const DomainPtr& d) {
  Lattice l = build_lattice(d);
  REQUIRE(l.bottom >= 0);
  REQUIRE(l.top >= 0);
  CHECK(l.nodes[l.bottom] == extremal_tiling(d, Extremal::Minimal));
  CHECK(l.nodes[l.top] == extremal_tiling(d, Extremal::Maximal));
  for (const Tiling& a : l.nodes)
    for (const Tiling& b : l.nodes) {
      Tiling lo = inf(a, b);
      Tiling hi = sup(a, b);
      // Closure: the results are tilings of the same domain, in the set.
      CHECK(tiling_set(l.nodes).count(lo.heights.values) == 1);
      CHECK(tiling_set(l.nodes).count(hi.heights.values) == 1);
      CHECK(leq(lo, a));
      CHECK(leq(lo, b));
      CHECK(leq(a, hi));
      CHECK(leq(b, hi));
      // Universal property against every other node.
      for (const Tiling& c : l.nodes) {
        if (leq(c, a) && leq(c, b)) CHECK(leq(c, lo));
        if (leq(a, c) && leq(b, c)) CHECK(leq(hi, c));
      }
      // Commutativity and absorption.
      CHECK(inf(b, a) == lo);
      CHECK(sup(b, a) == hi);
      CHECK(sup(a, lo) == a);
      CHECK(inf(a, hi) == a);
    }
}

}  // namespace

TEST_CASE("lattice laws hold on small domains") {
  check_lattice_laws(unit_hexagon());
  check_lattice_laws(hexagon(2, 2, 1));   // 6 tilings
  check_lattice_laws(dumbbell());         // 4 tilings
  check_lattice_laws(pseudo_hexagon({{2, 1}, {1, 0}}));  // 9 tilings
  check_lattice_laws(hexagon(2, 2, 2));   // 20 tilings
}

TEST_CASE("cover edges are single moves") {
  Lattice l = build_lattice(hexagon(2, 2, 2));
  CHECK(l.nodes.size() == 20);
  size_t edges = 0;
  for (size_t i = 0; i < l.nodes.size(); ++i)
    for (int j : l.up[i]) {
      ++edges;
      CHECK(compare(l.nodes[i].heights, l.nodes[j].heights) == Cmp::Less);
      CHECK(distance(l.nodes[i].heights, l.nodes[j].heights) == 1);
    }
  CHECK(edges > 0);
  // down is the transpose of up.
  size_t down_edges = 0;
  for (const auto& v : l.down) down_edges += v.size();
  CHECK(down_edges == edges);
}

TEST_CASE("a set missing one tiling is not closed under moves") {
  DomainPtr d = hexagon(2, 2, 1);
  std::vector<Tiling> all = all_tilings_by_flips(d);
  REQUIRE(all.size() == 6);
  Tiling lo = extremal_tiling(d, Extremal::Minimal);
  std::vector<Tiling> holed;
  int dropped = 0;
  for (const Tiling& t : all) {
    // Drop one tiling strictly between bottom and top.
    if (!dropped && distance(lo.heights, t.heights) == 1) {
      dropped = 1;
      continue;
    }
    holed.push_back(t);
  }
  REQUIRE(dropped == 1);
  try {
    build_lattice(d, holed);
    FAIL("expected NotFlipClosed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFlipClosed);
  }
}

TEST_CASE("interval filters by both bounds") {
  DomainPtr d = hexagon(2, 2, 2);
  Lattice l = build_lattice(d);
  CHECK(interval(l, l.nodes[l.bottom], l.nodes[l.top]).size() ==
        l.nodes.size());
  CHECK(interval(l, l.nodes[l.bottom], l.nodes[l.bottom]).size() == 1);
  // Against a brute-force filter with an independent predicate.
  for (const Tiling& hi : l.nodes) {
    size_t brute = 0;
    for (const Tiling& t : l.nodes) {
      bool ok = true;
      for (size_t i = 0; i < t.heights.values.size(); ++i)
        if (t.heights.values[i] > hi.heights.values[i]) ok = false;
      if (ok) ++brute;
    }
    CHECK(interval(l, l.nodes[l.bottom], hi).size() == brute);
  }
  try {
    interval(l, l.nodes[l.top], l.nodes[l.bottom]);
    FAIL("expected NotComparable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotComparable);
  }
}

TEST_CASE("product lattice stitches zone tilings over the frozen base") {
  DomainPtr d = dumbbell();
  Fracture f = fracture(d);
  REQUIRE(f.zones.size() == 2);
  std::vector<Lattice> zl;
  for (const DomainPtr& z : f.zones) zl.push_back(build_lattice(z));
  Lattice full = product(d, f.h_min, zl);
  CHECK(full.nodes.size() == 4);
  CHECK(tiling_set(full.nodes) == tiling_set(all_tilings_by_flips(d)));
}

TEST_CASE("dot export is stable and complete") {
  Lattice l = build_lattice(unit_hexagon());
  std::string dot = to_dot(l);
  CHECK(dot == to_dot(l));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}
