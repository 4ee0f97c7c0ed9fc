#include "lozenge/fracture.hpp"

#include <algorithm>
#include <deque>

#include "lozenge/error.hpp"

namespace lozenge {

Fracture fracture(const DomainPtr& domain) {
  Tiling tmin = extremal_tiling(domain, Extremal::Minimal);
  Tiling tmax = extremal_tiling(domain, Extremal::Maximal);

  Fracture f;
  f.h_min = tmin.heights;
  f.h_max = tmax.heights;
  std::vector<char> is_solid(domain->vertices().size(), 0);
  for (size_t i = 0; i < is_solid.size(); ++i)
    if (f.h_min.values[i] == f.h_max.values[i]) {
      is_solid[i] = 1;
      f.solid.push_back(static_cast<int>(i));
    }

  // A lozenge of the minimal tiling whose four corners all have pinned
  // heights appears in every tiling.
  std::vector<char> in_zone(domain->triangles().size(), 1);
  for (const Lozenge& l : tmin.lozenges()) {
    bool pinned = true;
    for (Vertex v : l.corners())
      if (!is_solid[domain->vertex_index(v)]) { pinned = false; break; }
    if (!pinned) continue;
    f.frozen.push_back(l);
    for (const Triangle& t : l.cells()) in_zone[domain->triangle_index(t)] = 0;
  }

  // Fertile zones: edge-connected components of the remaining triangles.
  std::vector<int> comp(domain->triangles().size(), -1);
  for (size_t s = 0; s < in_zone.size(); ++s) {
    if (!in_zone[s] || comp[s] >= 0) continue;
    std::vector<Triangle> zone;
    std::deque<size_t> bfs{s};
    comp[s] = static_cast<int>(s);
    while (!bfs.empty()) {
      size_t ti = bfs.front();
      bfs.pop_front();
      const Triangle t = domain->triangles()[ti];
      zone.push_back(t);
      auto vs = t.vertices();
      for (int i = 0; i < 3; ++i) {
        auto pair = edge_triangles(edge_between(vs[i], vs[(i + 1) % 3]));
        Triangle other = pair[0] == t ? pair[1] : pair[0];
        int oi = domain->triangle_index(other);
        if (oi < 0 || !in_zone[oi] || comp[oi] >= 0) continue;
        comp[oi] = static_cast<int>(s);
        bfs.push_back(oi);
      }
    }
    bool fertile = false;
    for (const Triangle& t : zone)
      for (Vertex v : t.vertices())
        if (!is_solid[domain->vertex_index(v)]) fertile = true;
    if (!fertile)
      fail(Errc::Internal, "zone with fully pinned heights was not frozen");
    f.zones.push_back(Domain::from_triangles(std::move(zone)));
  }
  return f;
}

}  // namespace lozenge
