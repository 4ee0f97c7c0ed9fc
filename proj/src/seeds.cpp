#include "lozenge/seeds.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lozenge/error.hpp"

namespace lozenge {

ZoneCtx make_zone_ctx(const DomainPtr& domain) {
  return ZoneCtx{domain, extremal_tiling(domain, Extremal::Minimal),
                 extremal_tiling(domain, Extremal::Maximal)};
}

std::vector<Vec3> lift(const Tiling& t) {
  const auto& d = t.domain();
  auto unit = [](char letter) {
    return letter == 'a' ? Vec3{1, 0, 0}
         : letter == 'b' ? Vec3{0, 1, 0}
                         : Vec3{0, 0, 1};
  };
  std::vector<Vec3> psi(d->vertices().size());
  std::vector<char> known(psi.size(), 0);
  int start = d->vertex_index(d->start());
  known[start] = 1;
  std::deque<int> bfs{start};
  while (!bfs.empty()) {
    int vi = bfs.front();
    bfs.pop_front();
    for (int ei : d->vertex_edges(vi)) {
      const auto& e = d->edges()[ei];
      int diff = t.heights.values[e.head] - t.heights.values[e.tail];
      // Tile edge: advance along the edge's axis.  Diagonal: the surface
      // steps down along the two other axes.
      Vec3 delta;
      if (diff == 1) {
        delta = unit(e.edge.letter);
      } else {
        Vec3 s{1, 1, 1};
        delta = Vec3{0, 0, 0} - (s - unit(e.edge.letter));
      }
      int other = e.tail == vi ? e.head : e.tail;
      Vec3 value = e.tail == vi ? psi[vi] + delta : psi[vi] - delta;
      if (!known[other]) {
        known[other] = 1;
        psi[other] = value;
        bfs.push_back(other);
      } else if (psi[other] != value) {
        fail(Errc::Internal, "surface lift is inconsistent at " +
                                 to_string(d->vertices()[other]));
      }
    }
  }
  return psi;
}

std::vector<Cube> cubes_of(const ZoneCtx& ctx, const Tiling& t) {
  std::vector<Cube> out;
  for (size_t i = 0; i < t.heights.values.size(); ++i) {
    int d = t.heights.values[i] - ctx.t_min.heights.values[i];
    if (d % 3 != 0) fail(Errc::Internal, "height gap not a multiple of 3");
    for (int level = 1; level <= d / 3; ++level)
      out.push_back({ctx.domain->vertices()[i], level});
  }
  return out;
}

namespace {

// Grows the largest pile of boxes reachable from `center` by up-moves whose
// box sits at nonnegative offsets from the seed corner and extends a
// downward-closed set.
Seed grow_seed(const ZoneCtx& ctx, const Tiling& t0, int center_idx) {
  const auto& d = ctx.domain;
  Tiling t = t0;
  std::vector<Vec3> psi = lift(t0);
  const Vec3 corner = psi[center_idx];

  std::set<Vec3> boxes;
  std::set<Triangle> range;
  while (true) {
    int best_vi = -1;
    Vec3 best_rel;
    for (int vi : flippable_vertices(t, FlipDir::Up)) {
      Vec3 rel = psi[vi] - corner;
      if (rel.x < 0 || rel.y < 0 || rel.z < 0) continue;
      if (rel.x > 0 && !boxes.count(rel - Vec3{1, 0, 0})) continue;
      if (rel.y > 0 && !boxes.count(rel - Vec3{0, 1, 0})) continue;
      if (rel.z > 0 && !boxes.count(rel - Vec3{0, 0, 1})) continue;
      if (boxes.count(rel)) fail(Errc::Internal, "box grown twice");
      if (best_vi < 0 || rel < best_rel) {
        best_vi = vi;
        best_rel = rel;
      }
    }
    if (best_vi < 0) break;
    t.heights.values[best_vi] += 3;
    psi[best_vi] = psi[best_vi] + Vec3{1, 1, 1};
    boxes.insert(best_rel);
    for (const Triangle& tri : incident_triangles(d->vertices()[best_vi]))
      range.insert(tri);
  }
  if (boxes.empty()) fail(Errc::Internal, "seed with no box");

  // Stack profile: shape[x][y] = number of boxes over (x,y).
  std::map<std::pair<int, int>, int> stacks;
  for (const Vec3& b : boxes) ++stacks[{b.x, b.y}];
  int max_x = 0;
  for (const auto& [xy, n] : stacks) max_x = std::max(max_x, xy.first);
  Pile shape(max_x + 1);
  for (const auto& [xy, n] : stacks) {
    auto& row = shape[xy.first];
    if (static_cast<int>(row.size()) <= xy.second)
      row.resize(xy.second + 1, 0);
    row[xy.second] = n;
  }
  if (!is_pile(shape)) fail(Errc::Internal, "seed filling is not a pile");

  Seed s;
  s.center = d->vertices()[center_idx];
  s.corner = corner;
  s.shape = std::move(shape);
  s.range.assign(range.begin(), range.end());
  return s;
}

}  // namespace

std::vector<Seed> find_seeds(const ZoneCtx& ctx, const Tiling& t) {
  std::vector<Seed> out;
  for (int vi : flippable_vertices(t, FlipDir::Up))
    out.push_back(grow_seed(ctx, t, vi));
  return out;  // flippable_vertices is ascending, so centers are sorted
}

std::vector<Seed> proper_seeds(const std::vector<Seed>& seeds) {
  std::vector<Seed> out;
  for (size_t i = 0; i < seeds.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < seeds.size() && keep; ++j) {
      if (i == j) continue;
      bool contained = std::includes(seeds[j].range.begin(),
                                     seeds[j].range.end(),
                                     seeds[i].range.begin(),
                                     seeds[i].range.end());
      if (!contained) continue;
      if (seeds[j].range.size() > seeds[i].range.size() || j < i)
        keep = false;  // strictly larger range, or an equal earlier one
    }
    if (keep) out.push_back(seeds[i]);
  }
  return out;
}

std::vector<Cube> filling_cubes(const ZoneCtx& ctx, const Seed& s,
                                const Pile& A) {
  if (!is_pile(A)) fail(Errc::OutOfRange, "filling is not a pile");
  if (A.size() > s.shape.size())
    fail(Errc::OutOfRange, "filling exceeds the seed shape");
  for (size_t x = 0; x < A.size(); ++x) {
    if (A[x].size() > s.shape[x].size())
      fail(Errc::OutOfRange, "filling exceeds the seed shape");
    for (size_t y = 0; y < A[x].size(); ++y)
      if (A[x][y] > s.shape[x][y])
        fail(Errc::OutOfRange, "filling exceeds the seed shape");
  }
  const auto& d = ctx.domain;
  std::vector<Cube> out;
  for (size_t x = 0; x < A.size(); ++x)
    for (size_t y = 0; y < A[x].size(); ++y)
      for (int z = 0; z < A[x][y]; ++z) {
        Vec3 abs = s.corner + Vec3{static_cast<int>(x), static_cast<int>(y), z};
        Vertex v = d->start() + project(abs);
        int vi = d->vertex_index(v);
        if (vi < 0) fail(Errc::Internal, "box projects outside the zone");
        int num = coord_sum(abs) + 3 - ctx.t_min.heights.values[vi];
        if (num % 3 != 0 || num <= 0)
          fail(Errc::Internal, "box level is not positive integral");
        out.push_back({v, num / 3});
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tiling> dk_chain(const ZoneCtx& ctx) {
  std::vector<Tiling> chain{ctx.t_min};
  int guard = distance(ctx.t_min.heights, ctx.t_max.heights) + 1;
  while (!(chain.back() == ctx.t_max)) {
    if (--guard < 0) fail(Errc::Internal, "saturation chain does not close");
    std::vector<Seed> seeds = find_seeds(ctx, chain.back());
    if (seeds.empty())
      fail(Errc::NotFertile, "zone is stuck below its maximal tiling");
    Tiling next = chain.back();
    for (const Seed& s : proper_seeds(seeds))
      for (const Cube& c : filling_cubes(ctx, s, s.shape))
        next.heights.values[ctx.domain->vertex_index(c.center)] += 3;
    try {
      validate(next.heights);
    } catch (const Error& e) {
      fail(Errc::Internal, std::string("saturation step broke: ") + e.what());
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

Tiling min_with_cubes(const ZoneCtx& ctx, const std::vector<Cube>& cubes) {
  const auto& d = ctx.domain;
  std::vector<int> h = ctx.t_min.heights.values;
  const std::vector<int>& cap = ctx.t_max.heights.values;
  std::deque<int> work;
  std::vector<char> queued(h.size(), 0);
  auto raise = [&](int vi, int value) {
    if (value <= h[vi]) return;
    if (value > cap[vi])
      fail(Errc::UnsatisfiableCube,
           "no tiling reaches height " + std::to_string(value) + " at " +
               to_string(d->vertices()[vi]));
    h[vi] = value;
    if (!queued[vi]) {
      queued[vi] = 1;
      work.push_back(vi);
    }
  };
  for (const Cube& c : cubes) {
    int vi = d->vertex_index(c.center);
    if (vi < 0)
      fail(Errc::DomainMismatch, to_string(c.center) + " is not in the zone");
    raise(vi, ctx.t_min.heights.values[vi] + 3 * c.level);
  }
  while (!work.empty()) {
    int vi = work.front();
    work.pop_front();
    queued[vi] = 0;
    for (int ei : d->vertex_edges(vi)) {
      const auto& e = d->edges()[ei];
      // Across an edge x -> y (positive direction) any tiling satisfies
      // h(y) >= h(x)-2 and h(x) >= h(y)-1.
      raise(e.head, h[e.tail] - 2);
      raise(e.tail, h[e.head] - 1);
    }
  }
  HeightFunction out{d, std::move(h)};
  try {
    validate(out);
  } catch (const Error& e) {
    fail(Errc::Internal, std::string("constrained minimum is invalid: ") +
                             e.what());
  }
  return Tiling{std::move(out)};
}

}  // namespace lozenge
