#include "lozenge/tiling.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

#include "lozenge/error.hpp"

namespace lozenge {

std::vector<Lozenge> Tiling::lozenges() const {
  std::vector<Lozenge> out;
  for (const auto& e : heights.domain->edges())
    if (e.triangles == 2 &&
        heights.values[e.head] - heights.values[e.tail] == -2)
      out.push_back({e.edge.letter, e.edge.from});
  std::sort(out.begin(), out.end());
  return out;
}

Tiling tiling_from_height(HeightFunction h) {
  validate(h);
  return Tiling{std::move(h)};
}

Tiling tiling_from_lozenges(const DomainPtr& domain,
                            const std::vector<Lozenge>& lozenges) {
  const auto& tris = domain->triangles();
  std::vector<char> covered(tris.size(), 0);
  std::vector<char> is_diag(domain->edges().size(), 0);
  for (const Lozenge& l : lozenges) {
    for (const Triangle& t : l.cells()) {
      int ti = domain->triangle_index(t);
      if (ti < 0)
        fail(Errc::NotATiling,
             to_string(l) + " sticks out of the domain");
      if (covered[ti])
        fail(Errc::NotATiling, "tile overlap at " + to_string(t));
      covered[ti] = 1;
    }
    auto de = l.diagonal_edge();
    int ei = domain->edge_index(edge_between(de[0], de[1]));
    if (ei < 0) fail(Errc::Internal, "diagonal edge missing from edge table");
    is_diag[ei] = 1;
  }
  if (2 * lozenges.size() != tris.size())
    fail(Errc::NotATiling, "tiles cover " +
                               std::to_string(2 * lozenges.size()) + " of " +
                               std::to_string(tris.size()) + " triangles");

  // Integrate the heights from the base vertex: +1 across a tile edge,
  // -2 across a diagonal (positive direction).
  HeightFunction h{domain, std::vector<int>(domain->vertices().size(), 0)};
  std::vector<char> known(h.values.size(), 0);
  int start = domain->vertex_index(domain->start());
  known[start] = 1;
  std::deque<int> bfs{start};
  while (!bfs.empty()) {
    int vi = bfs.front();
    bfs.pop_front();
    for (int ei : domain->vertex_edges(vi)) {
      const auto& e = domain->edges()[ei];
      int d = is_diag[ei] ? -2 : 1;
      int other = e.tail == vi ? e.head : e.tail;
      int value = e.tail == vi ? h.values[vi] + d : h.values[vi] - d;
      if (!known[other]) {
        known[other] = 1;
        h.values[other] = value;
        bfs.push_back(other);
      } else if (h.values[other] != value) {
        fail(Errc::NotATiling, "inconsistent heights at " +
                                   to_string(domain->vertices()[other]));
      }
    }
  }
  try {
    validate(h);
  } catch (const Error& err) {
    fail(Errc::NotATiling, err.what());
  }
  return Tiling{std::move(h)};
}

// ---------------------------------------------------------------------------
// Extremal tilings by frontier peeling.
//
// Minimal: repeatedly take the highest vertex v whose fan is not fully
// covered.  Around v, every open fan edge whose positive direction points
// away from v must be a lozenge diagonal (far end v-2) and every edge
// pointing towards v must be a tile edge (far end v-1); this pairs the open
// fan triangles two by two, so every placement is forced.  Maximal is the
// mirror image (lowest vertex, roles of the two edge parities swapped).
// Any conflict proves the domain untileable.
// ---------------------------------------------------------------------------
Tiling extremal_tiling(const DomainPtr& domain, Extremal which,
                       PeelStats* stats) {
  BoundaryHeights bh = boundary_heights(domain);
  if (!bh.consistent)
    fail(Errc::Untileable, "boundary heights admit no extension");

  const bool minimal = which == Extremal::Minimal;
  // Outgoing-positive ring edges have even index; incoming-positive odd.
  const int diag_parity = minimal ? 0 : 1;
  const int diag_step = minimal ? -2 : +2;
  const int tile_step = minimal ? -1 : +1;

  const size_t nv = domain->vertices().size();
  std::vector<int> h(nv, 0);
  std::vector<char> known(nv, 0);
  std::vector<char> covered(domain->triangles().size(), 0);
  size_t remaining = domain->triangles().size();
  long placements = 0;

  // Max-heap on (priority, preference for lexicographically small vertices).
  using Item = std::pair<int, int>;  // (signed height, -vertex index)
  std::priority_queue<Item> queue;
  auto push = [&](int vi) {
    queue.push({minimal ? h[vi] : -h[vi], -vi});
  };
  auto assign = [&](int vi, int value) {
    if (known[vi]) {
      if (h[vi] != value)
        fail(Errc::Untileable, "conflicting heights at " +
                                   to_string(domain->vertices()[vi]));
      return;
    }
    known[vi] = 1;
    h[vi] = value;
    push(vi);
  };

  for (size_t i = 0; i < nv; ++i)
    if (bh.h[i]) assign(static_cast<int>(i), *bh.h[i]);

  while (!queue.empty() && remaining > 0) {
    int vi = -queue.top().second;
    queue.pop();
    Vertex v = domain->vertices()[vi];
    int hv = h[vi];

    auto fan = incident_triangles(v);
    auto ring = hexagon_ring(v);
    int open_tri[6], open_count = 0;
    bool open[6];
    for (int i = 0; i < 6; ++i) {
      int ti = domain->triangle_index(fan[i]);
      open_tri[i] = ti;
      open[i] = ti >= 0 && !covered[ti];
      if (open[i]) ++open_count;
    }
    if (open_count == 0) continue;

    // Cover fan edge k as diagonal or tile edge; diagonals pair the two
    // adjacent fan triangles into a lozenge.
    auto handle_edge = [&](int k) {
      int far = domain->vertex_index(ring[k]);
      if (far < 0) fail(Errc::Internal, "fan vertex outside domain");
      if (k % 2 == diag_parity) {
        assign(far, hv + diag_step);
        GridEdge ge = edge_between(v, ring[k]);
        int ta = open_tri[(k + 5) % 6], tb = open_tri[k];
        if (ta < 0 || tb < 0 || covered[ta] || covered[tb])
          fail(Errc::Untileable,
               "forced lozenge does not fit at " + to_string(v));
        covered[ta] = covered[tb] = 1;
        remaining -= 2;
        ++placements;
        (void)ge;
      } else {
        assign(far, hv + tile_step);
      }
    };

    if (open_count == 6) {
      for (int k = 0; k < 6; ++k) handle_edge(k);
      continue;
    }

    // Maximal cyclic runs of open triangles.
    for (int i = 0; i < 6; ++i) {
      if (!open[i] || open[(i + 5) % 6]) continue;  // run starts at i
      int len = 1;
      while (open[(i + len) % 6]) ++len;
      int flank_a = i, flank_b = (i + len) % 6;  // edges bounding the run
      if (flank_a % 2 == diag_parity || flank_b % 2 == diag_parity)
        fail(Errc::Untileable,
             "unmatchable fan boundary at " + to_string(v));
      if (len % 2 != 0)
        fail(Errc::Untileable, "odd fan run at " + to_string(v));
      for (int e : {flank_a, flank_b}) {
        int far = domain->vertex_index(ring[e]);
        if (far < 0 || !known[far] || h[far] != hv + tile_step)
          fail(Errc::Untileable,
               "frontier height mismatch at " + to_string(ring[e]));
      }
      for (int k = 1; k < len; ++k) handle_edge((i + k) % 6);
    }
  }

  if (remaining > 0)
    fail(Errc::Untileable, "region could not be covered");

  HeightFunction hf{domain, std::move(h)};
  try {
    validate(hf);
  } catch (const Error& err) {
    fail(Errc::Untileable, err.what());
  }
  if (stats) stats->placements = placements;
  return Tiling{std::move(hf)};
}

std::vector<int> flippable_vertices(const Tiling& t, FlipDir dir) {
  std::vector<int> out;
  const auto& d = t.domain();
  for (int vi : d->interior_vertices()) {
    Vertex v = d->vertices()[vi];
    int hv = t.heights.values[vi];
    bool ok = true;
    for (Vertex u : hexagon_ring(v)) {
      int hu = t.heights.values[d->vertex_index(u)];
      if (dir == FlipDir::Up ? hu <= hv : hu >= hv) { ok = false; break; }
    }
    if (ok) out.push_back(vi);
  }
  return out;
}

Tiling flip(const Tiling& t, int vertex_idx) {
  const auto& d = t.domain();
  if (vertex_idx < 0 || static_cast<size_t>(vertex_idx) >= d->vertices().size())
    fail(Errc::OutOfRange, "vertex index " + std::to_string(vertex_idx));
  if (!d->interior(vertex_idx))
    fail(Errc::NotFlippable,
         to_string(d->vertices()[vertex_idx]) + " is not interior");
  Vertex v = d->vertices()[vertex_idx];
  int hv = t.heights.values[vertex_idx];
  bool below = true, above = true;
  for (Vertex u : hexagon_ring(v)) {
    int hu = t.heights.values[d->vertex_index(u)];
    if (hu <= hv) below = false;
    if (hu >= hv) above = false;
  }
  if (!below && !above)
    fail(Errc::NotFlippable, to_string(v) + " is not a local extremum");
  Tiling out = t;
  out.heights.values[vertex_idx] += below ? 3 : -3;
  return out;
}

std::vector<Tiling> all_tilings_by_flips(const DomainPtr& domain) {
  Tiling t0{};
  try {
    t0 = extremal_tiling(domain, Extremal::Minimal);
  } catch (const Error& e) {
    if (e.code() == Errc::Untileable) return {};
    throw;
  }
  std::set<std::vector<int>> seen{t0.heights.values};
  std::deque<Tiling> todo{t0};
  while (!todo.empty()) {
    Tiling t = std::move(todo.front());
    todo.pop_front();
    for (FlipDir dir : {FlipDir::Up, FlipDir::Down})
      for (int vi : flippable_vertices(t, dir)) {
        Tiling next = flip(t, vi);
        if (seen.insert(next.heights.values).second) todo.push_back(next);
      }
  }
  std::vector<Tiling> out;
  out.reserve(seen.size());
  for (const auto& values : seen)
    out.push_back(Tiling{HeightFunction{domain, values}});
  return out;
}

namespace {

void cover_search(const DomainPtr& domain, std::vector<char>& covered,
                  std::vector<Lozenge>& acc, size_t from,
                  std::vector<Tiling>& out) {
  const auto& tris = domain->triangles();
  while (from < tris.size() && covered[from]) ++from;
  if (from == tris.size()) {
    out.push_back(tiling_from_lozenges(domain, acc));
    return;
  }
  const Triangle t = tris[from];
  auto vs = t.vertices();
  for (int i = 0; i < 3; ++i) {
    GridEdge e = edge_between(vs[i], vs[(i + 1) % 3]);
    auto pair = edge_triangles(e);
    Triangle other = pair[0] == t ? pair[1] : pair[0];
    int oi = domain->triangle_index(other);
    if (oi < 0 || covered[oi]) continue;
    covered[from] = covered[oi] = 1;
    acc.push_back({e.letter, e.from});
    cover_search(domain, covered, acc, from + 1, out);
    acc.pop_back();
    covered[from] = covered[oi] = 0;
  }
}

}  // namespace

std::vector<Tiling> all_tilings_by_cover_search(const DomainPtr& domain) {
  std::vector<char> covered(domain->triangles().size(), 0);
  std::vector<Lozenge> acc;
  std::vector<Tiling> out;
  cover_search(domain, covered, acc, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lozenge
