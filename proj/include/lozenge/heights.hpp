// Integer height functions on domain vertices.
//
// A height function assigns an integer to every vertex so that across each
// edge, read in its positive direction, the difference is +1 (the edge lies
// between two tiles) or -2 (the edge is the hidden diagonal of a lozenge),
// and boundary values match the contour walk with base value 0.  Height
// functions are in bijection with tilings.

#pragma once

#include <optional>
#include <vector>

#include "lozenge/domain.hpp"

namespace lozenge {

struct HeightFunction {
  DomainPtr domain;
  std::vector<int> values;  // indexed by Domain vertex index

  int at(Vertex v) const;
  auto operator<=>(const HeightFunction&) const = default;
};

// Heights of the boundary vertices obtained by walking the contour from the
// base vertex (height 0): +1 per positive step, -1 per negative step.
// If the walk forces an impossible difference across an edge of the domain
// joining two boundary vertices, `consistent` is false and the domain admits
// no tiling.  Unassigned entries are interior vertices.
struct BoundaryHeights {
  std::vector<std::optional<int>> h;  // indexed by Domain vertex index
  bool consistent = true;
};
BoundaryHeights boundary_heights(const DomainPtr& domain);

// Checks the edge-difference and boundary conditions.
// Errors: DomainMismatch, NotAHeightFunction.
void validate(const HeightFunction& h);

enum class Cmp { Less, Equal, Greater, Incomparable };

// Pointwise order.  Errors: DomainMismatch.
Cmp compare(const HeightFunction& a, const HeightFunction& b);

// Pointwise lattice operations; the results are again height functions.
// Errors: DomainMismatch.
HeightFunction pointwise_min(const HeightFunction& a, const HeightFunction& b);
HeightFunction pointwise_max(const HeightFunction& a, const HeightFunction& b);

// Number of elementary moves between two tilings: sum of pointwise
// differences divided by 3.  Errors: DomainMismatch, Internal (not a
// multiple of 3, impossible for valid inputs).
int distance(const HeightFunction& a, const HeightFunction& b);

}  // namespace lozenge
