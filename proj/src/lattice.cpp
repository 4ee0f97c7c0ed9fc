#include "lozenge/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lozenge/error.hpp"

namespace lozenge {

Lattice build_lattice(const DomainPtr& domain, std::vector<Tiling> tilings) {
  if (tilings.empty()) fail(Errc::Untileable, "no tilings to order");
  for (const Tiling& t : tilings)
    if (t.domain() != domain)
      fail(Errc::DomainMismatch, "tiling from a different domain");
  std::sort(tilings.begin(), tilings.end());
  tilings.erase(std::unique(tilings.begin(), tilings.end()), tilings.end());

  Lattice l;
  l.domain = domain;
  l.nodes = std::move(tilings);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < l.nodes.size(); ++i)
    index[l.nodes[i].heights.values] = static_cast<int>(i);

  l.up.resize(l.nodes.size());
  l.down.resize(l.nodes.size());
  for (size_t i = 0; i < l.nodes.size(); ++i) {
    for (int vi : flippable_vertices(l.nodes[i], FlipDir::Up)) {
      Tiling t = flip(l.nodes[i], vi);
      auto it = index.find(t.heights.values);
      if (it == index.end())
        fail(Errc::NotFlipClosed,
             "a move from node " + std::to_string(i) + " leaves the set");
      l.up[i].push_back(it->second);
      l.down[it->second].push_back(static_cast<int>(i));
    }
    // Down-moves land in the set iff the reverse up-move does, so checking
    // them separately only guards the symmetric closure.
    for (int vi : flippable_vertices(l.nodes[i], FlipDir::Down)) {
      Tiling t = flip(l.nodes[i], vi);
      if (!index.count(t.heights.values))
        fail(Errc::NotFlipClosed,
             "a move from node " + std::to_string(i) + " leaves the set");
    }
  }
  for (auto& v : l.up) std::sort(v.begin(), v.end());
  for (auto& v : l.down) std::sort(v.begin(), v.end());

  for (size_t i = 0; i < l.nodes.size(); ++i) {
    if (l.down[i].empty()) {
      if (l.bottom >= 0) fail(Errc::Internal, "two minimal nodes");
      l.bottom = static_cast<int>(i);
    }
    if (l.up[i].empty()) {
      if (l.top >= 0) fail(Errc::Internal, "two maximal nodes");
      l.top = static_cast<int>(i);
    }
  }
  return l;
}

Lattice build_lattice(const DomainPtr& domain) {
  std::vector<Tiling> all = all_tilings_by_flips(domain);
  if (all.empty()) fail(Errc::Untileable, "domain has no tiling");
  return build_lattice(domain, std::move(all));
}

Tiling inf(const Tiling& a, const Tiling& b) {
  return tiling_from_height(pointwise_min(a.heights, b.heights));
}

Tiling sup(const Tiling& a, const Tiling& b) {
  return tiling_from_height(pointwise_max(a.heights, b.heights));
}

std::vector<Tiling> interval(const Lattice& l, const Tiling& lo,
                             const Tiling& hi) {
  Cmp c = compare(lo.heights, hi.heights);
  if (c != Cmp::Less && c != Cmp::Equal)
    fail(Errc::NotComparable, "interval bounds are not ordered");
  std::vector<Tiling> out;
  for (const Tiling& t : l.nodes) {
    Cmp lower = compare(lo.heights, t.heights);
    Cmp upper = compare(t.heights, hi.heights);
    if ((lower == Cmp::Less || lower == Cmp::Equal) &&
        (upper == Cmp::Less || upper == Cmp::Equal))
      out.push_back(t);
  }
  return out;
}

Lattice product(const DomainPtr& domain, const HeightFunction& base,
                const std::vector<Lattice>& zones) {
  if (base.domain != domain)
    fail(Errc::DomainMismatch, "base heights from a different domain");

  // Per-zone vertex translation: zone vertex index -> (full index, offset).
  struct ZoneMap {
    std::vector<int> full_index;
    int offset = 0;
  };
  std::vector<ZoneMap> maps(zones.size());
  for (size_t z = 0; z < zones.size(); ++z) {
    const auto& zd = zones[z].domain;
    maps[z].offset = base.values[domain->vertex_index(zd->start())];
    maps[z].full_index.reserve(zd->vertices().size());
    for (Vertex v : zd->vertices()) {
      int fi = domain->vertex_index(v);
      if (fi < 0)
        fail(Errc::DomainMismatch,
             "zone vertex " + to_string(v) + " not in full domain");
      maps[z].full_index.push_back(fi);
    }
  }

  std::vector<Tiling> nodes;
  std::vector<int> pick(zones.size(), 0);
  while (true) {
    HeightFunction h = base;
    for (size_t z = 0; z < zones.size(); ++z) {
      const auto& t = zones[z].nodes[pick[z]];
      for (size_t i = 0; i < t.heights.values.size(); ++i)
        h.values[maps[z].full_index[i]] = maps[z].offset + t.heights.values[i];
    }
    nodes.push_back(tiling_from_height(std::move(h)));
    size_t z = 0;
    while (z < zones.size() &&
           ++pick[z] == static_cast<int>(zones[z].nodes.size())) {
      pick[z] = 0;
      ++z;
    }
    if (z == zones.size()) break;
  }
  return build_lattice(domain, std::move(nodes));
}

std::string to_dot(const Lattice& l) {
  std::ostringstream out;
  out << "digraph tilings {\n  rankdir=BT;\n";
  for (size_t i = 0; i < l.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << i << "\"";
    if (static_cast<int>(i) == l.bottom) out << " shape=invtriangle";
    else if (static_cast<int>(i) == l.top) out << " shape=triangle";
    out << "];\n";
  }
  for (size_t i = 0; i < l.nodes.size(); ++i)
    for (int j : l.up[i]) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lozenge
