// Contour words, closed grid paths and the domains they enclose.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lozenge/grid.hpp"

namespace lozenge {

struct ContourWord {
  std::vector<Direction> steps;
};

// A closed, non-self-intersecting path: vertices[0] == vertices.back().
struct ClosedPath {
  std::vector<Vertex> vertices;
};

// A finite union of grid triangles together with its (simple, CCW) boundary
// cycle.  Construction precomputes vertex/edge indices used by every other
// module; instances are immutable afterwards.
class Domain {
 public:
  struct Edge {
    GridEdge edge;
    int tail = -1;      // vertex index of positive-direction tail
    int head = -1;      // vertex index of positive-direction head
    int triangles = 0;  // number of incident domain triangles (1 or 2)
  };

  // Builds a domain from a triangle set.  The boundary is traced and oriented
  // counterclockwise; `start` (if given) must lie on the boundary and becomes
  // the base vertex, otherwise the lexicographically smallest boundary vertex
  // is used.
  static std::shared_ptr<const Domain> from_triangles(
      std::vector<Triangle> triangles,
      std::optional<Vertex> start = std::nullopt);

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Vertex>& boundary() const { return boundary_; }
  Vertex start() const { return boundary_.front(); }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_index(Vertex v) const;          // -1 if absent
  int triangle_index(const Triangle&) const; // -1 if absent
  bool contains(const Triangle& t) const { return triangle_index(t) >= 0; }
  bool on_boundary(int vertex_idx) const { return boundary_flag_[vertex_idx]; }
  // True iff all six incident triangles are in the domain.
  bool interior(int vertex_idx) const { return interior_flag_[vertex_idx]; }
  const std::vector<int>& interior_vertices() const { return interior_; }
  // Edge indices incident to a vertex.
  const std::vector<int>& vertex_edges(int vertex_idx) const {
    return vertex_edges_[vertex_idx];
  }
  int edge_index(const GridEdge& e) const;   // -1 if absent

  // The boundary cycle as a contour word (one letter per boundary step).
  std::string contour_word() const;

 private:
  Domain() = default;

  std::vector<Triangle> triangles_;
  std::vector<Vertex> vertices_;
  std::vector<Vertex> boundary_;  // closed: front() == back() is NOT stored
  std::vector<Edge> edges_;
  std::unordered_map<Vertex, int> vindex_;
  std::vector<bool> boundary_flag_;
  std::vector<bool> interior_flag_;
  std::vector<int> interior_;
  std::vector<std::vector<int>> vertex_edges_;
  std::unordered_map<Vertex, int> tri_up_index_;
  std::unordered_map<Vertex, int> tri_down_index_;
  std::unordered_map<Vertex, int> edge_a_, edge_b_, edge_c_;
};

using DomainPtr = std::shared_ptr<const Domain>;

// Parses a word over {a,b,c,A,B,C} (capitals are inverses); whitespace is
// ignored.  Errors: BadLetter, Empty.
ContourWord parse_contour(const std::string& text);

// Realizes a word as a closed path from `start`.
// Errors: NotClosed, SelfIntersecting (any vertex revisited before the end).
ClosedPath trace(const ContourWord& w, Vertex start);

// The set of triangles with positive winding number w.r.t. the path
// (clockwise input is reversed first).  Errors: EmptyInterior.
DomainPtr enclose(const ClosedPath& path);

// True iff the abelianized image of the word is trivial (per-letter balance).
bool l_label_is_trivial(const ContourWord& w);

// Hexagonal domain with side lengths x,y,z,x,y,z.  Errors: BadSize.
DomainPtr hexagon(int x, int y, int z);

// Pseudo-hexagonal domain delimited by the three staircase profiles of a
// plane partition (support shape, first row, first column).
// Errors: NotAPlanePartition.
DomainPtr pseudo_hexagon(const std::vector<std::vector<int>>& P);

}  // namespace lozenge
