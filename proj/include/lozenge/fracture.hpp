// Decomposition of a domain into its frozen part (tiles common to every
// tiling) and fertile zones (maximal regions that still admit more than one
// tiling).  Tilings of the whole domain are exactly the independent choices
// of one tiling per zone laid over the frozen part.

#pragma once

#include <vector>

#include "lozenge/tiling.hpp"

namespace lozenge {

struct Fracture {
  HeightFunction h_min;          // heights of the minimal tiling
  HeightFunction h_max;          // heights of the maximal tiling
  std::vector<int> solid;        // vertex indices with h_min == h_max
  std::vector<Lozenge> frozen;   // lozenges present in every tiling
  std::vector<DomainPtr> zones;  // fertile zones, as stand-alone domains
};

// Errors: Untileable.
Fracture fracture(const DomainPtr& domain);

}  // namespace lozenge
