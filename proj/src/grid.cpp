#include "lozenge/grid.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lozenge {

Vertex letter_vector(char letter) {
  switch (letter) {
    case 'a':
      return {1, 0};
    case 'b':
      return {0, 1};
    case 'c':
      return {-1, -1};
    default:
      throw std::invalid_argument("letter_vector: bad letter");
  }
}

Vertex step(Vertex v, Direction d) {
  Vertex u = letter_vector(d.letter);
  return {v.p + d.sign * u.p, v.q + d.sign * u.q};
}

std::array<Vertex, 6> hexagon_ring(Vertex v) {
  return {Vertex{v.p + 1, v.q},     Vertex{v.p + 1, v.q + 1},
          Vertex{v.p, v.q + 1},     Vertex{v.p - 1, v.q},
          Vertex{v.p - 1, v.q - 1}, Vertex{v.p, v.q - 1}};
}

std::array<Vertex, 3> Triangle::vertices() const {
  const auto [p, q] = anchor;
  if (up) return {Vertex{p, q}, Vertex{p + 1, q}, Vertex{p + 1, q + 1}};
  return {Vertex{p, q}, Vertex{p, q + 1}, Vertex{p + 1, q + 1}};
}

std::array<Triangle, 2> Lozenge::cells() const {
  const auto [p, q] = anchor;
  switch (diagonal) {
    case 'a':  // diagonal edge (p,q)-(p+1,q); sides b and c
      return {Triangle{true, {p, q}}, Triangle{false, {p, q - 1}}};
    case 'b':  // diagonal edge (p,q)-(p,q+1); sides a and c
      return {Triangle{false, {p, q}}, Triangle{true, {p - 1, q}}};
    case 'c':  // diagonal edge (p,q)-(p+1,q+1); sides a and b
      return {Triangle{true, {p, q}}, Triangle{false, {p, q}}};
    default:
      throw std::invalid_argument("Lozenge::cells: bad diagonal");
  }
}

std::array<Vertex, 4> Lozenge::corners() const {
  const auto [p, q] = anchor;
  switch (diagonal) {
    case 'a':
      return {Vertex{p, q - 1}, Vertex{p, q}, Vertex{p + 1, q},
              Vertex{p + 1, q + 1}};
    case 'b':
      return {Vertex{p - 1, q}, Vertex{p, q}, Vertex{p, q + 1},
              Vertex{p + 1, q + 1}};
    case 'c':
      return {Vertex{p, q}, Vertex{p + 1, q}, Vertex{p + 1, q + 1},
              Vertex{p, q + 1}};
    default:
      throw std::invalid_argument("Lozenge::corners: bad diagonal");
  }
}

std::array<Vertex, 2> Lozenge::diagonal_edge() const {
  Vertex other = diagonal == 'c' ? anchor + Vertex{1, 1}
                                 : anchor + letter_vector(diagonal);
  return {anchor, other};
}

GridEdge edge_between(Vertex u, Vertex v) {
  Vertex d = v - u;
  if (d == Vertex{1, 0}) return {u, 'a'};
  if (d == Vertex{-1, 0}) return {v, 'a'};
  if (d == Vertex{0, 1}) return {u, 'b'};
  if (d == Vertex{0, -1}) return {v, 'b'};
  if (d == Vertex{1, 1}) return {u, 'c'};
  if (d == Vertex{-1, -1}) return {v, 'c'};
  throw std::invalid_argument("edge_between: vertices not adjacent");
}

std::array<Triangle, 2> edge_triangles(const GridEdge& e) {
  const auto [p, q] = e.from;
  switch (e.letter) {
    case 'a':
      return {Triangle{true, {p, q}}, Triangle{false, {p, q - 1}}};
    case 'b':
      return {Triangle{false, {p, q}}, Triangle{true, {p - 1, q}}};
    case 'c':
      return {Triangle{true, {p, q}}, Triangle{false, {p, q}}};
    default:
      throw std::invalid_argument("edge_triangles: bad letter");
  }
}

std::array<Triangle, 6> incident_triangles(Vertex v) {
  const auto [p, q] = v;
  return {Triangle{true, {p, q}},          Triangle{false, {p, q}},
          Triangle{true, {p - 1, q}},      Triangle{false, {p - 1, q - 1}},
          Triangle{true, {p - 1, q - 1}},  Triangle{false, {p, q - 1}}};
}

std::array<Direction, 6> ring_directions() {
  return {Direction{'a', +1}, Direction{'c', -1}, Direction{'b', +1},
          Direction{'a', -1}, Direction{'c', +1}, Direction{'b', -1}};
}

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
}

std::string to_string(const Triangle& t) {
  return std::string(t.up ? "U" : "D") + to_string(t.anchor);
}

std::string to_string(const Lozenge& l) {
  return std::string(1, l.diagonal) + to_string(l.anchor);
}

}  // namespace lozenge
