// Shared domain builders and brute-force references for the tests.

#pragma once

#include <random>
#include <set>
#include <vector>

#include "lozenge/domain.hpp"
#include "lozenge/partitions.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge::testing {

// The six triangles around one vertex.
inline DomainPtr unit_hexagon(Vertex center = {0, 0}) {
  auto tris = incident_triangles(center);
  return Domain::from_triangles({tris.begin(), tris.end()});
}

// Two unit hexagons joined by a two-triangle bridge whose lozenge is forced.
inline DomainPtr dumbbell() {
  std::vector<Triangle> tris;
  for (Vertex c : {Vertex{0, 0}, Vertex{3, 1}})
    for (const Triangle& t : incident_triangles(c)) tris.push_back(t);
  tris.push_back({true, {1, 0}});
  tris.push_back({false, {1, 0}});
  return Domain::from_triangles(std::move(tris));
}

// n unit hexagons sharing edges along the direction (2,1).
inline DomainPtr hex_chain(int n) {
  std::vector<Triangle> tris;
  for (int i = 0; i < n; ++i)
    for (const Triangle& t : incident_triangles({2 * i, i}))
      tris.push_back(t);
  return Domain::from_triangles(std::move(tris));
}

// Chain of unit hexagons joined by forced bridges; `steps[i]` is false for a
// (3,1) bridge and true for a (1,3) bridge.  Every bridge lozenge is frozen,
// so the tilings are independent per hexagon: 2^(steps+1) in total.
inline DomainPtr frozen_strip(const std::vector<bool>& steps) {
  std::vector<Triangle> tris;
  Vertex c{0, 0};
  for (const Triangle& t : incident_triangles(c)) tris.push_back(t);
  for (bool up : steps) {
    Vertex bridge = up ? c + Vertex{0, 1} : c + Vertex{1, 0};
    tris.push_back({true, bridge});
    tris.push_back({false, bridge});
    c = c + (up ? Vertex{1, 3} : Vertex{3, 1});
    for (const Triangle& t : incident_triangles(c)) tris.push_back(t);
  }
  return Domain::from_triangles(std::move(tris));
}

inline DomainPtr random_frozen_strip(std::mt19937& rng, int hexagons) {
  std::vector<bool> steps;
  for (int i = 1; i < hexagons; ++i) steps.push_back(rng() % 2 == 0);
  return frozen_strip(steps);
}

// Random nonempty pile inside a 3x3x3 box whose domain stays small.
inline Pile random_pile(std::mt19937& rng) {
  while (true) {
    Pile p(3, std::vector<int>(3, 0));
    p[0][0] = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == 0 && j == 0) continue;
        int cap = std::min(i > 0 ? p[i - 1][j] : 3, j > 0 ? p[i][j - 1] : 3);
        p[i][j] = cap == 0 ? 0 : static_cast<int>(rng() % (cap + 1));
      }
    if (weight(p) >= 2) return p;
  }
}

inline DomainPtr random_compact_domain(std::mt19937& rng,
                                       int max_triangles = 40) {
  while (true) {
    DomainPtr d = pseudo_hexagon(random_pile(rng));
    if (static_cast<int>(d->triangles().size()) <= max_triangles) return d;
  }
}

// Height vectors of all tilings found by exhaustive cover search; the
// reference the structured algorithms are compared against.
inline std::set<std::vector<int>> tiling_set(const std::vector<Tiling>& ts) {
  std::set<std::vector<int>> out;
  for (const Tiling& t : ts) out.insert(t.heights.values);
  return out;
}

}  // namespace lozenge::testing
