// Integer-coordinate model of the triangular grid: vertices, directed
// labelled edges, triangles and lozenges.
//
// Conventions (fixed once, everything else depends on them):
//   - basis: a -> (1,0), b -> (0,1), c -> (-1,-1), so a+b+c = 0 and all
//     arithmetic stays integral;
//   - up-triangle U(p,q) has vertices {(p,q),(p+1,q),(p+1,q+1)} (word abc),
//     down-triangle D(p,q) has {(p,q),(p,q+1),(p+1,q+1)} (word bac);
//   - a lozenge is identified by the letter of its internal diagonal edge and
//     the lexicographically smaller endpoint of that edge.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lozenge {

struct Vertex {
  int p = 0;
  int q = 0;
  auto operator<=>(const Vertex&) const = default;
};

inline Vertex operator+(Vertex u, Vertex v) { return {u.p + v.p, u.q + v.q}; }
inline Vertex operator-(Vertex u, Vertex v) { return {u.p - v.p, u.q - v.q}; }

// Vertex color; increases by 1 (mod 3) under each positive step.
inline int color(Vertex v) { return ((v.p + v.q) % 3 + 3) % 3; }

// A directed step: one of the six a,b,c letters with a sign.
struct Direction {
  char letter = 'a';  // 'a', 'b' or 'c'
  int sign = +1;      // +1 or -1
  auto operator<=>(const Direction&) const = default;
};

inline Direction inverse(Direction d) { return {d.letter, -d.sign}; }

// Unit vector of the positive step for a letter.
Vertex letter_vector(char letter);

Vertex step(Vertex v, Direction d);

// The six grid neighbours of v in cyclic (counterclockwise) order,
// starting with v + a.
std::array<Vertex, 6> hexagon_ring(Vertex v);

struct Triangle {
  bool up = true;  // true: U(anchor), false: D(anchor)
  Vertex anchor;
  auto operator<=>(const Triangle&) const = default;

  std::array<Vertex, 3> vertices() const;
};

struct Lozenge {
  char diagonal = 'a';  // letter of the internal diagonal edge
  Vertex anchor;        // lexicographically smaller diagonal endpoint
  auto operator<=>(const Lozenge&) const = default;

  // The two triangles glued along the diagonal edge.
  std::array<Triangle, 2> cells() const;
  // The four corner vertices.
  std::array<Vertex, 4> corners() const;
  // The two endpoints of the internal diagonal edge (anchor first).
  std::array<Vertex, 2> diagonal_edge() const;
};

inline std::array<Triangle, 2> lozenge_cells(const Lozenge& l) {
  return l.cells();
}

// An undirected grid edge in canonical form: `from` is the lexicographically
// smaller endpoint.  For letters 'a' and 'b' the positive step leads from
// `from` to `to`; for 'c' (positive step (-1,-1)) it runs `to -> from`.
struct GridEdge {
  Vertex from;
  char letter = 'a';
  auto operator<=>(const GridEdge&) const = default;

  Vertex to() const {
    return letter == 'c' ? from + Vertex{1, 1} : from + letter_vector(letter);
  }
  // Positive-direction endpoints (tail, head): head = tail + sign* step.
  Vertex pos_tail() const { return letter == 'c' ? to() : from; }
  Vertex pos_head() const { return letter == 'c' ? from : to(); }
};

// Canonical edge between two adjacent vertices; aborts if not adjacent.
GridEdge edge_between(Vertex u, Vertex v);

// The two grid triangles incident to an edge.
std::array<Triangle, 2> edge_triangles(const GridEdge& e);

// The six triangles incident to v in counterclockwise order.  ring_edge(v,i)
// separates incident_triangles[i-1 mod 6] from incident_triangles[i]; its
// direction from v is: i=0: a+, 1: c-, 2: b+, 3: a-, 4: c+, 5: b-.
std::array<Triangle, 6> incident_triangles(Vertex v);
std::array<Direction, 6> ring_directions();

std::string to_string(Vertex v);
std::string to_string(const Triangle& t);
std::string to_string(const Lozenge& l);

}  // namespace lozenge

template <>
struct std::hash<lozenge::Vertex> {
  size_t operator()(const lozenge::Vertex& v) const {
    return std::hash<std::uint64_t>()(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.p)) << 32) ^
        static_cast<std::uint32_t>(v.q));
  }
};
