#include "lozenge/domain.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "lozenge/error.hpp"

namespace lozenge {

ContourWord parse_contour(const std::string& text) {
  ContourWord w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    switch (ch) {
      case 'a': case 'b': case 'c':
        w.steps.push_back({ch, +1});
        break;
      case 'A': case 'B': case 'C':
        w.steps.push_back({static_cast<char>(ch - 'A' + 'a'), -1});
        break;
      default:
        fail(Errc::BadLetter,
             "contour letter '" + std::string(1, ch) + "' (want a,b,c,A,B,C)");
    }
  }
  if (w.steps.empty()) fail(Errc::Empty, "contour word has no letters");
  return w;
}

ClosedPath trace(const ContourWord& w, Vertex start) {
  ClosedPath path;
  path.vertices.reserve(w.steps.size() + 1);
  path.vertices.push_back(start);
  std::unordered_set<Vertex> seen{start};
  for (size_t i = 0; i < w.steps.size(); ++i) {
    Vertex next = step(path.vertices.back(), w.steps[i]);
    bool last = (i + 1 == w.steps.size());
    if (last) {
      if (next != start)
        fail(Errc::NotClosed, "path ends at " + to_string(next) +
                                  ", not at start " + to_string(start));
    } else if (!seen.insert(next).second) {
      fail(Errc::SelfIntersecting,
           "path revisits " + to_string(next) + " at step " +
               std::to_string(i + 1));
    }
    path.vertices.push_back(next);
  }
  return path;
}

bool l_label_is_trivial(const ContourWord& w) {
  int bal[3] = {0, 0, 0};
  for (Direction d : w.steps) bal[d.letter - 'a'] += d.sign;
  return bal[0] == 0 && bal[1] == 0 && bal[2] == 0;
}

namespace {

// Winding number of the (3x-scaled) point around the (3x-scaled) path,
// by counting signed crossings of the rightward horizontal ray.  Triangle
// centroids never share a y-coordinate with path vertices (their tripled
// coordinates are not multiples of 3), so there are no degenerate cases.
int winding(const std::vector<Vertex>& path3, Vertex pt3) {
  int w = 0;
  for (size_t i = 0; i + 1 < path3.size(); ++i) {
    Vertex s = path3[i], t = path3[i + 1];
    long cross = static_cast<long>(t.p - s.p) * (pt3.q - s.q) -
                 static_cast<long>(t.q - s.q) * (pt3.p - s.p);
    if (s.q < pt3.q && t.q > pt3.q && cross > 0) ++w;   // upward, pt left
    if (t.q < pt3.q && s.q > pt3.q && cross < 0) --w;   // downward, pt right
  }
  return w;
}

Vertex centroid3(const Triangle& t) {
  const auto [p, q] = t.anchor;
  return t.up ? Vertex{3 * p + 2, 3 * q + 1} : Vertex{3 * p + 1, 3 * q + 2};
}

}  // namespace

DomainPtr enclose(const ClosedPath& path) {
  if (path.vertices.size() < 2 || path.vertices.front() != path.vertices.back())
    fail(Errc::NotClosed, "enclose needs a closed path");
  std::vector<Vertex> path3;
  path3.reserve(path.vertices.size());
  for (Vertex v : path.vertices) path3.push_back({3 * v.p, 3 * v.q});

  int pmin = path.vertices[0].p, pmax = pmin;
  int qmin = path.vertices[0].q, qmax = qmin;
  for (Vertex v : path.vertices) {
    pmin = std::min(pmin, v.p); pmax = std::max(pmax, v.p);
    qmin = std::min(qmin, v.q); qmax = std::max(qmax, v.q);
  }

  std::vector<Triangle> inside, flipped;
  for (int p = pmin - 1; p <= pmax; ++p)
    for (int q = qmin - 1; q <= qmax; ++q)
      for (bool up : {true, false}) {
        Triangle t{up, {p, q}};
        int w = winding(path3, centroid3(t));
        if (w > 0) inside.push_back(t);
        if (w < 0) flipped.push_back(t);
      }
  // A simple closed path winds +1 or -1 around its interior; a clockwise
  // input is accepted and re-oriented.
  if (inside.empty()) inside.swap(flipped);
  if (inside.empty()) fail(Errc::EmptyInterior, "path encloses no triangle");
  return Domain::from_triangles(std::move(inside), path.vertices.front());
}

std::shared_ptr<const Domain> Domain::from_triangles(
    std::vector<Triangle> triangles, std::optional<Vertex> start) {
  if (triangles.empty()) fail(Errc::BadSize, "domain needs at least one triangle");
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()),
                  triangles.end());

  auto d = std::shared_ptr<Domain>(new Domain());
  d->triangles_ = std::move(triangles);
  for (size_t i = 0; i < d->triangles_.size(); ++i) {
    const Triangle& t = d->triangles_[i];
    (t.up ? d->tri_up_index_ : d->tri_down_index_)[t.anchor] =
        static_cast<int>(i);
  }

  // Vertex table, sorted.
  {
    std::unordered_set<Vertex> vs;
    for (const Triangle& t : d->triangles_)
      for (Vertex v : t.vertices()) vs.insert(v);
    d->vertices_.assign(vs.begin(), vs.end());
    std::sort(d->vertices_.begin(), d->vertices_.end());
    for (size_t i = 0; i < d->vertices_.size(); ++i)
      d->vindex_[d->vertices_[i]] = static_cast<int>(i);
  }

  // Edge table, sorted, with incidence counts.
  {
    std::vector<GridEdge> all;
    for (const Triangle& t : d->triangles_) {
      auto vs = t.vertices();
      for (int i = 0; i < 3; ++i)
        all.push_back(edge_between(vs[i], vs[(i + 1) % 3]));
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < all.size();) {
      size_t j = i;
      while (j < all.size() && all[j] == all[i]) ++j;
      Edge e;
      e.edge = all[i];
      e.tail = d->vindex_.at(all[i].pos_tail());
      e.head = d->vindex_.at(all[i].pos_head());
      e.triangles = static_cast<int>(j - i);
      d->edges_.push_back(e);
      i = j;
    }
    for (size_t i = 0; i < d->edges_.size(); ++i) {
      const GridEdge& e = d->edges_[i].edge;
      (e.letter == 'a' ? d->edge_a_
       : e.letter == 'b' ? d->edge_b_
                         : d->edge_c_)[e.from] = static_cast<int>(i);
    }
    d->vertex_edges_.resize(d->vertices_.size());
    for (size_t i = 0; i < d->edges_.size(); ++i) {
      d->vertex_edges_[d->edges_[i].tail].push_back(static_cast<int>(i));
      d->vertex_edges_[d->edges_[i].head].push_back(static_cast<int>(i));
    }
  }

  // Boundary / interior classification.
  d->boundary_flag_.assign(d->vertices_.size(), false);
  d->interior_flag_.assign(d->vertices_.size(), false);
  size_t boundary_edge_count = 0;
  for (const Edge& e : d->edges_)
    if (e.triangles == 1) {
      ++boundary_edge_count;
      d->boundary_flag_[e.tail] = true;
      d->boundary_flag_[e.head] = true;
    }
  for (size_t i = 0; i < d->vertices_.size(); ++i) {
    bool all_in = true;
    for (const Triangle& t : incident_triangles(d->vertices_[i]))
      if (!d->contains(t)) { all_in = false; break; }
    d->interior_flag_[i] = all_in;
    if (all_in) d->interior_.push_back(static_cast<int>(i));
  }

  // Trace the boundary counterclockwise, keeping the domain on the left.
  Vertex s;
  if (start) {
    s = *start;
    int si = d->vertex_index(s);
    if (si < 0 || !d->boundary_flag_[si])
      fail(Errc::Internal, "start vertex " + to_string(s) + " not on boundary");
  } else {
    s = d->vertices_.front();  // sorted; lexicographically smallest is boundary
    if (!d->boundary_flag_[0])
      fail(Errc::Internal, "smallest vertex not on boundary");
  }

  auto tri_in = [&](Vertex v, int i) {
    return d->contains(incident_triangles(v)[((i % 6) + 6) % 6]);
  };
  // Outgoing ring direction at v whose edge has the domain triangle on the
  // left and none on the right, scanning clockwise from index `from`.
  auto pick = [&](Vertex v, int from) {
    for (int k = 0; k < 6; ++k) {
      int i = ((from - k) % 6 + 6) % 6;
      if (tri_in(v, i) && !tri_in(v, i - 1)) return i;
    }
    return -1;
  };

  int i0 = -1;
  for (int i = 0; i < 6; ++i)
    if (tri_in(s, i) && !tri_in(s, i - 1)) { i0 = i; break; }
  if (i0 < 0) fail(Errc::Internal, "no boundary edge at start vertex");

  Vertex v = s;
  int dir = i0;
  size_t steps = 0;
  do {
    d->boundary_.push_back(v);
    Vertex u = step(v, ring_directions()[dir]);
    // Ring index at u of the edge back to v (opposite direction).
    int back = (dir + 3) % 6;
    v = u;
    dir = pick(v, back - 1);
    if (dir < 0) fail(Errc::Internal, "boundary walk stuck at " + to_string(v));
    if (++steps > boundary_edge_count)
      fail(Errc::Internal, "boundary walk does not close");
  } while (!(v == s && dir == i0));
  if (steps != boundary_edge_count)
    fail(Errc::Internal,
         "boundary is not a single cycle (disconnected domain or hole)");

  return d;
}

int Domain::vertex_index(Vertex v) const {
  auto it = vindex_.find(v);
  return it == vindex_.end() ? -1 : it->second;
}

int Domain::triangle_index(const Triangle& t) const {
  const auto& m = t.up ? tri_up_index_ : tri_down_index_;
  auto it = m.find(t.anchor);
  return it == m.end() ? -1 : it->second;
}

int Domain::edge_index(const GridEdge& e) const {
  const auto& m = e.letter == 'a' ? edge_a_ : e.letter == 'b' ? edge_b_ : edge_c_;
  auto it = m.find(e.from);
  return it == m.end() ? -1 : it->second;
}

std::string Domain::contour_word() const {
  std::string w;
  for (size_t i = 0; i < boundary_.size(); ++i) {
    Vertex u = boundary_[i];
    Vertex v = boundary_[(i + 1) % boundary_.size()];
    Vertex diff = v - u;
    for (char letter : {'a', 'b', 'c'}) {
      if (diff == letter_vector(letter)) w += letter;
      Vertex neg = Vertex{0, 0} - letter_vector(letter);
      if (diff == neg) w += static_cast<char>(letter - 'a' + 'A');
    }
  }
  return w;
}

DomainPtr pseudo_hexagon(const std::vector<std::vector<int>>& P) {
  // Validate: left-justified rows of weakly decreasing lengths, entries
  // weakly decreasing along rows and down columns, all nonnegative.
  if (P.empty()) fail(Errc::NotAPlanePartition, "no rows");
  for (size_t i = 0; i < P.size(); ++i) {
    if (P[i].empty()) fail(Errc::NotAPlanePartition, "empty row");
    if (i > 0 && P[i].size() > P[i - 1].size())
      fail(Errc::NotAPlanePartition, "row lengths must weakly decrease");
    for (size_t j = 0; j < P[i].size(); ++j) {
      if (P[i][j] < 0) fail(Errc::NotAPlanePartition, "negative entry");
      if (j > 0 && P[i][j] > P[i][j - 1])
        fail(Errc::NotAPlanePartition, "entries must weakly decrease in rows");
      if (i > 0 && j < P[i - 1].size() && P[i][j] > P[i - 1][j])
        fail(Errc::NotAPlanePartition, "entries must weakly decrease in columns");
    }
  }
  if (P[0][0] == 0) fail(Errc::BadSize, "pile has no boxes");

  // The domain is the union of the cells of the lozenges seen when the pile
  // is viewed along (1,1,1): floor squares behind the pile's support, and
  // the two coordinate walls up to the pile's first row / first column.
  std::vector<Triangle> tris;
  auto add = [&](const Lozenge& l) {
    for (const Triangle& t : l.cells()) tris.push_back(t);
  };
  int rows = 0;  // rows that actually contain a box
  while (rows < static_cast<int>(P.size()) && P[rows][0] >= 1) ++rows;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= static_cast<int>(P[i - 1].size()); ++j)
      if (P[i - 1][j - 1] >= 1) add({'c', {i - 1, j - 1}});    // floor
  for (int j = 1; j <= static_cast<int>(P[0].size()); ++j)
    for (int k = 1; k <= P[0][j - 1]; ++k) add({'a', {-k, j - k}});   // x-wall
  for (int i = 1; i <= rows; ++i)
    for (int k = 1; k <= P[i - 1][0]; ++k) add({'b', {i - k, -k}});   // y-wall
  return Domain::from_triangles(std::move(tris), Vertex{rows, 0});
}

DomainPtr hexagon(int x, int y, int z) {
  if (x < 1 || y < 1 || z < 1)
    fail(Errc::BadSize, "hexagon sides must be positive");
  std::vector<std::vector<int>> P(x, std::vector<int>(y, z));
  return pseudo_hexagon(P);
}

}  // namespace lozenge
