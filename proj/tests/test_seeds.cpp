#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "lozenge/error.hpp"
#include "lozenge/seeds.hpp"

using namespace lozenge;
using namespace lozenge::testing;

TEST_CASE("the lift is a stepped surface consistent with heights") {
  for (DomainPtr d : {unit_hexagon(), hexagon(2, 2, 2),
                      pseudo_hexagon({{2, 1}, {1, 0}})}) {
    ZoneCtx ctx = make_zone_ctx(d);
    for (const Tiling& t : all_tilings_by_flips(d)) {
      std::vector<Vec3> pos = lift(t);
      CHECK(pos[d->vertex_index(d->start())] == Vec3{0, 0, 0});
      for (size_t i = 0; i < pos.size(); ++i) {
        CHECK(coord_sum(pos[i]) == t.heights.values[i]);
        CHECK(project(pos[i]) == d->vertices()[i] - d->start());
      }
    }
  }
}

TEST_CASE("boxes over the minimal tiling count and locate the up-moves") {
  DomainPtr d = hexagon(2, 2, 2);
  ZoneCtx ctx = make_zone_ctx(d);
  CHECK(cubes_of(ctx, ctx.t_min).empty());
  // The maximal tiling fills the whole 2x2x2 box.
  std::vector<Cube> full = cubes_of(ctx, ctx.t_max);
  CHECK(full.size() == 8);
  std::set<int> levels;
  for (const Cube& c : full) levels.insert(c.level);
  CHECK(levels == std::set<int>{1, 2});
  // One up-move adds exactly one first-level box at the moved vertex.
  int vi = flippable_vertices(ctx.t_min, FlipDir::Up).front();
  std::vector<Cube> one = cubes_of(ctx, flip(ctx.t_min, vi));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Cube{d->vertices()[vi], 1});
  // Box count equals the move distance from the bottom.
  for (const Tiling& t : all_tilings_by_flips(d))
    CHECK(static_cast<long>(cubes_of(ctx, t).size()) ==
          distance(ctx.t_min.heights, t.heights));
}

TEST_CASE("the minimal tiling of a box has a single full-box seed") {
  DomainPtr d = hexagon(2, 2, 2);
  ZoneCtx ctx = make_zone_ctx(d);
  std::vector<Seed> seeds = proper_seeds(find_seeds(ctx, ctx.t_min));
  REQUIRE(seeds.size() == 1);
  CHECK(seeds[0].shape == Pile{{2, 2}, {2, 2}});
  // The largest filling reaches every triangle of the hexagon.
  CHECK(seeds[0].range.size() == d->triangles().size());
  // Its saturation chain jumps straight from bottom to top.
  std::vector<Tiling> chain = dk_chain(ctx);
  REQUIRE(chain.size() == 2);
  CHECK(chain.front() == ctx.t_min);
  CHECK(chain.back() == ctx.t_max);
}

TEST_CASE("saturation chains rise to the maximal tiling") {
  std::mt19937 rng(555);
  std::vector<DomainPtr> domains = {unit_hexagon(), hexagon(2, 2, 1),
                                    hexagon(3, 3, 3),
                                    pseudo_hexagon({{2, 1}, {1, 0}})};
  for (int i = 0; i < 6; ++i) domains.push_back(random_compact_domain(rng));
  for (DomainPtr d : domains) {
    ZoneCtx ctx = make_zone_ctx(d);
    std::vector<Tiling> chain = dk_chain(ctx);
    REQUIRE(!chain.empty());
    CHECK(chain.front() == ctx.t_min);
    CHECK(chain.back() == ctx.t_max);
    for (size_t k = 1; k < chain.size(); ++k)
      CHECK(compare(chain[k - 1].heights, chain[k].heights) == Cmp::Less);
  }
}

TEST_CASE("proper seeds have pairwise disjoint ranges") {
  std::mt19937 rng(556);
  std::vector<DomainPtr> domains = {hexagon(3, 3, 2), hex_chain(3)};
  for (int i = 0; i < 6; ++i) domains.push_back(random_compact_domain(rng));
  for (DomainPtr d : domains) {
    ZoneCtx ctx = make_zone_ctx(d);
    for (const Tiling& t : dk_chain(ctx)) {
      std::vector<Seed> seeds = proper_seeds(find_seeds(ctx, t));
      std::set<Triangle> seen;
      for (const Seed& s : seeds)
        for (const Triangle& tri : s.range) {
          CHECK(seen.count(tri) == 0);
          seen.insert(tri);
        }
    }
  }
}

TEST_CASE("filling a seed adds exactly the predicted boxes") {
  DomainPtr d = hexagon(2, 2, 2);
  ZoneCtx ctx = make_zone_ctx(d);
  Seed s = proper_seeds(find_seeds(ctx, ctx.t_min))[0];
  for (const Pile& A : all_limited_plane_partitions(s.shape)) {
    std::vector<Cube> cubes = filling_cubes(ctx, s, A);
    CHECK(static_cast<int>(cubes.size()) == weight(A));
    // The least tiling containing them has exactly those boxes.
    Tiling t = min_with_cubes(ctx, cubes);
    CHECK(cubes_of(ctx, t) == cubes);
  }
  CHECK_THROWS_AS(filling_cubes(ctx, s, Pile{{3}}), Error);
}

TEST_CASE("least tiling with boxes matches the brute-force infimum") {
  DomainPtr d = hexagon(2, 2, 2);
  ZoneCtx ctx = make_zone_ctx(d);
  std::vector<Tiling> all = all_tilings_by_flips(d);
  // For every tiling t, the least tiling containing the boxes of t is t.
  for (const Tiling& t : all)
    CHECK(min_with_cubes(ctx, cubes_of(ctx, t)) == t);
  // For arbitrary box sets: infimum over all tilings containing them.
  std::mt19937 rng(314);
  std::vector<Cube> pool = cubes_of(ctx, ctx.t_max);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Cube> want;
    for (const Cube& c : pool)
      if (rng() % 2) want.push_back(c);
    const Tiling* best = nullptr;
    for (const Tiling& t : all) {
      std::vector<Cube> have = cubes_of(ctx, t);
      bool contains = std::includes(have.begin(), have.end(), want.begin(),
                                    want.end());
      if (!contains) continue;
      if (!best || compare(t.heights, best->heights) == Cmp::Less) best = &t;
    }
    REQUIRE(best != nullptr);  // the box poset makes the infimum attained
    CHECK(min_with_cubes(ctx, want) == *best);
  }
  // A box above the ceiling is unsatisfiable.
  try {
    min_with_cubes(ctx, {Cube{ctx.domain->vertices()[flippable_vertices(
                                  ctx.t_min, FlipDir::Up)[0]],
                              99}});
    FAIL("expected UnsatisfiableCube");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsatisfiableCube);
  }
}
