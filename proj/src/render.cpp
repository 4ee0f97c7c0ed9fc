#include "lozenge/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "lozenge/error.hpp"

namespace lozenge {

namespace {

// The four corners of a lozenge in cyclic order: diagonal endpoint, side
// corner of one cell, other diagonal endpoint, side corner of the other.
std::array<Vertex, 4> cyclic_corners(const Lozenge& l) {
  auto diag = l.diagonal_edge();
  auto cells = l.cells();
  auto third = [&](const Triangle& t) {
    for (Vertex v : t.vertices())
      if (v != diag[0] && v != diag[1]) return v;
    fail(Errc::Internal, "degenerate lozenge cell");
    return Vertex{};  // unreachable
  };
  return {diag[0], third(cells[0]), diag[1], third(cells[1])};
}

std::set<GridEdge> side_edges(const Tiling& t) {
  std::set<GridEdge> sides;
  for (const Lozenge& l : t.lozenges()) {
    auto c = cyclic_corners(l);
    for (int i = 0; i < 4; ++i)
      sides.insert(edge_between(c[i], c[(i + 1) % 4]));
  }
  return sides;
}

}  // namespace

std::string render_ascii(const Tiling& t) {
  // Character cell of an edge, keyed by its canonical tail (p,q):
  //   '_' for a at (-q, 2p-q+1); '\' for b at (-q, 2p-q-1) under the upper
  //   endpoint; '/' for c at (-q, 2p-q) on the lower endpoint.
  std::map<std::pair<int, int>, char> cells;
  for (const GridEdge& e : side_edges(t)) {
    const auto [p, q] = e.from;
    int row = -q, col = 2 * p - q;
    char glyph;
    switch (e.letter) {
      case 'a': glyph = '_'; col += 1; break;
      case 'b': glyph = '\\'; col -= 1; break;
      default: glyph = '/'; break;
    }
    cells[{row, col}] = glyph;
  }
  int rmin = cells.begin()->first.first, rmax = rmin;
  int cmin = cells.begin()->first.second, cmax = cmin;
  for (const auto& [rc, g] : cells) {
    rmin = std::min(rmin, rc.first);
    rmax = std::max(rmax, rc.first);
    cmin = std::min(cmin, rc.second);
    cmax = std::max(cmax, rc.second);
  }
  std::string out;
  for (int r = rmin; r <= rmax; ++r) {
    std::string line(cmax - cmin + 1, ' ');
    for (int c = cmin; c <= cmax; ++c) {
      auto it = cells.find({r, c});
      if (it != cells.end()) line[c - cmin] = it->second;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Tiling& t) {
  constexpr double kScale = 40.0;
  constexpr double kRoot3Half = 0.8660254037844386;
  auto embed = [&](Vertex v) {
    // a -> (1,0), b -> (-1/2, sqrt3/2), y axis flipped for screen coords.
    double x = (v.p - 0.5 * v.q) * kScale;
    double y = -(v.q * kRoot3Half) * kScale;
    return std::pair<double, double>{x, y};
  };
  auto fill = [](char d) {
    switch (d) {
      case 'a': return "#cb4b43";
      case 'b': return "#4a7ba6";
      default: return "#e0c04f";
    }
  };

  std::vector<Lozenge> lozenges = t.lozenges();
  double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
  for (const Lozenge& l : lozenges)
    for (Vertex v : l.corners()) {
      auto [x, y] = embed(v);
      xmin = std::min(xmin, x); xmax = std::max(xmax, x);
      ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
  const double pad = 0.25 * kScale;

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << xmin - pad << " " << ymin - pad << " "
      << (xmax - xmin + 2 * pad) << " " << (ymax - ymin + 2 * pad) << "\">\n";
  for (const Lozenge& l : lozenges) {
    svg << "  <polygon points=\"";
    auto c = cyclic_corners(l);
    for (int i = 0; i < 4; ++i) {
      auto [x, y] = embed(c[i]);
      svg << (i ? " " : "") << x << "," << y;
    }
    svg << "\" fill=\"" << fill(l.diagonal)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lozenge
