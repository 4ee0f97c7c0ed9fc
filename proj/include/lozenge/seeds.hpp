// Three-dimensional reading of the tilings of a fertile zone.
//
// A tiling lifts to a stepped surface over the minimal tiling; each up-move
// adds a unit box.  A seed is an up-flippable vertex together with the
// largest pile of boxes that can be grown greedily from it; its fillings
// (sub-piles of that largest pile) are the degrees of freedom used by the
// structured enumeration.

#pragma once

#include <vector>

#include "lozenge/partitions.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge {

struct Vec3 {
  int x = 0, y = 0, z = 0;
  auto operator<=>(const Vec3&) const = default;
};
inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline int coord_sum(Vec3 a) { return a.x + a.y + a.z; }
// Projection along (1,1,1) back to grid coordinates.
inline Vertex project(Vec3 a) { return {a.x - a.z, a.y - a.z}; }

// A unit box over the minimal tiling: the `level`-th up-move (1-based) at
// `center`.  Present in a tiling T iff h_T(center) >= h_min(center)+3*level.
struct Cube {
  Vertex center;
  int level = 1;
  auto operator<=>(const Cube&) const = default;
};

// A zone with its extremal tilings precomputed.  Errors: Untileable.
struct ZoneCtx {
  DomainPtr domain;
  Tiling t_min;
  Tiling t_max;
};
ZoneCtx make_zone_ctx(const DomainPtr& domain);

// Integer 3D position of every vertex (by vertex index) on the stepped
// surface of t, with the base vertex at the origin.  The coordinate sum of a
// position equals the height of its vertex.
std::vector<Vec3> lift(const Tiling& t);

// Cubes of t over the minimal tiling, sorted.
std::vector<Cube> cubes_of(const ZoneCtx& ctx, const Tiling& t);

struct Seed {
  Vertex center;                // the up-flippable vertex the seed grows from
  Vec3 corner;                  // lift position of `center` in the seed's tiling
  Pile shape;                   // stack profile of the largest greedy filling
  std::vector<Triangle> range;  // triangles the largest filling touches, sorted
};

// All seeds of t, one per up-flippable vertex, sorted by center.
std::vector<Seed> find_seeds(const ZoneCtx& ctx, const Tiling& t);

// Seeds whose range is maximal for inclusion (duplicated ranges collapsed to
// the lexicographically first center).
std::vector<Seed> proper_seeds(const std::vector<Seed>& seeds);

// Cubes added by filling `s` with the pile A <= s.shape.
std::vector<Cube> filling_cubes(const ZoneCtx& ctx, const Seed& s,
                                const Pile& A);

// The saturation chain of the zone: starts at the minimal tiling, each step
// applies the largest filling of every proper seed at once, ends at the
// maximal tiling.  Errors: NotFertile (a non-final step has no seed).
std::vector<Tiling> dk_chain(const ZoneCtx& ctx);

// Least tiling (pointwise) that contains all the given cubes: least fixpoint
// of the edge difference constraints above the floors the cubes impose.
// Errors: UnsatisfiableCube (no tiling of the zone contains them all).
Tiling min_with_cubes(const ZoneCtx& ctx, const std::vector<Cube>& cubes);

}  // namespace lozenge
