// The set of all tilings of a domain ordered by pointwise height comparison.
// Covers of the order are exactly the elementary moves, so the order is a
// distributive lattice with the extremal tilings as bottom and top.

#pragma once

#include <string>
#include <vector>

#include "lozenge/tiling.hpp"

namespace lozenge {

struct Lattice {
  DomainPtr domain;
  std::vector<Tiling> nodes;            // sorted by height vector
  std::vector<std::vector<int>> up;     // up[i]: nodes one up-move above i
  std::vector<std::vector<int>> down;   // transpose of up
  int bottom = -1;                      // minimal tiling
  int top = -1;                         // maximal tiling
};

// Lattice of all tilings (by exhaustive move search).  Errors: Untileable.
Lattice build_lattice(const DomainPtr& domain);

// Lattice on a given set of tilings; every move from a member must stay in
// the set.  Errors: Untileable (empty set), NotFlipClosed, DomainMismatch.
Lattice build_lattice(const DomainPtr& domain, std::vector<Tiling> tilings);

// Meet and join: pointwise min/max of heights, which are again tilings.
Tiling inf(const Tiling& a, const Tiling& b);
Tiling sup(const Tiling& a, const Tiling& b);

// All lattice nodes t with lo <= t <= hi.  Errors: NotComparable (lo,hi not
// ordered), DomainMismatch.
std::vector<Tiling> interval(const Lattice& l, const Tiling& lo,
                             const Tiling& hi);

// Lattice of a domain that decomposes into independent zones: every node is
// the frozen base heights overlaid with one tiling per zone, shifted by the
// base height of the zone's own base vertex.
Lattice product(const DomainPtr& domain, const HeightFunction& base,
                const std::vector<Lattice>& zones);

// Graphviz rendering of the cover relation, byte-stable across runs.
std::string to_dot(const Lattice& l);

}  // namespace lozenge
