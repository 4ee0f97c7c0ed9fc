#include <doctest.h>

#include <algorithm>
#include <set>

#include "lozenge/grid.hpp"

using namespace lozenge;

TEST_CASE("letter vectors sum to zero and colors advance by one") {
  CHECK(letter_vector('a') + letter_vector('b') + letter_vector('c') ==
        Vertex{0, 0});
  for (char l : {'a', 'b', 'c'})
    for (Vertex v : {Vertex{0, 0}, Vertex{3, -2}, Vertex{-5, 7}}) {
      Vertex u = step(v, {l, +1});
      CHECK(color(u) == (color(v) + 1) % 3);
      CHECK(step(u, {l, -1}) == v);
    }
}

TEST_CASE("ring directions reach the hexagon ring in order") {
  Vertex v{2, -1};
  auto ring = hexagon_ring(v);
  auto dirs = ring_directions();
  for (int i = 0; i < 6; ++i) CHECK(step(v, dirs[i]) == ring[i]);
}

TEST_CASE("triangle fans and separating edges") {
  Vertex v{1, 4};
  auto fan = incident_triangles(v);
  auto ring = hexagon_ring(v);
  for (int i = 0; i < 6; ++i) {
    // Fan triangle i is spanned by v and ring neighbours i, i+1.
    auto vs = fan[i].vertices();
    std::set<Vertex> got(vs.begin(), vs.end());
    CHECK(got == std::set<Vertex>{v, ring[i], ring[(i + 1) % 6]});
    // The edge towards ring[i] separates fan triangles i-1 and i.
    auto pair = edge_triangles(edge_between(v, ring[i]));
    std::set<Triangle> tp(pair.begin(), pair.end());
    CHECK(tp == std::set<Triangle>{fan[(i + 5) % 6], fan[i]});
  }
}

TEST_CASE("edges canonicalize with the smaller endpoint and positive head") {
  for (char l : {'a', 'b', 'c'}) {
    Vertex u{0, 0};
    Vertex v = u + letter_vector(l);
    GridEdge e1 = edge_between(u, v);
    GridEdge e2 = edge_between(v, u);
    CHECK(e1 == e2);
    CHECK(e1.letter == l);
    CHECK(e1.pos_head() - e1.pos_tail() == letter_vector(l));
  }
  CHECK_THROWS(edge_between({0, 0}, {2, 0}));
}

TEST_CASE("lozenge cells share exactly the diagonal edge") {
  for (char d : {'a', 'b', 'c'}) {
    Lozenge l{d, {3, 1}};
    auto cells = l.cells();
    auto a = cells[0].vertices();
    auto b = cells[1].vertices();
    std::set<Vertex> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::set<Vertex> shared;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(shared, shared.begin()));
    auto diag = l.diagonal_edge();
    CHECK(shared == std::set<Vertex>{diag[0], diag[1]});
    CHECK(diag[0] < diag[1]);  // anchor is the smaller endpoint
    CHECK(diag[0] == l.anchor);
    // The four corners are the union of the cell vertices.
    std::set<Vertex> all(sa);
    all.insert(sb.begin(), sb.end());
    auto corners = l.corners();
    CHECK(all == std::set<Vertex>(corners.begin(), corners.end()));
    // The diagonal really is an edge of the given letter.
    CHECK(edge_between(diag[0], diag[1]).letter == d);
  }
}
