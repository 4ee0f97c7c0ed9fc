// Lozenge tilings of a domain, represented by their height functions.

#pragma once

#include <vector>

#include "lozenge/heights.hpp"

namespace lozenge {

struct Tiling {
  HeightFunction heights;
  auto operator<=>(const Tiling&) const = default;

  const DomainPtr& domain() const { return heights.domain; }
  // The lozenges of the tiling: one per edge whose positive-direction
  // height difference is -2 (a hidden diagonal), sorted.
  std::vector<Lozenge> lozenges() const;
};

// Checks that the lozenges exactly cover the domain and integrates their
// height function.  Errors: NotATiling, DomainMismatch.
Tiling tiling_from_lozenges(const DomainPtr& domain,
                            const std::vector<Lozenge>& lozenges);

// Wraps a validated height function.  Errors: NotAHeightFunction,
// DomainMismatch.
Tiling tiling_from_height(HeightFunction h);

enum class Extremal { Minimal, Maximal };

struct PeelStats {
  long placements = 0;  // lozenges placed; equals triangles/2 on success
};

// Builds the minimal or maximal tiling by peeling the extremal frontier
// vertex: every lozenge around it is forced, so the number of placements is
// linear in the number of triangles.  Errors: Untileable.
Tiling extremal_tiling(const DomainPtr& domain, Extremal which,
                       PeelStats* stats = nullptr);

// Interior vertices strictly below (FlipUp) or strictly above (FlipDown)
// all six neighbours; exactly these admit an elementary move.
enum class FlipDir { Up, Down };
std::vector<int> flippable_vertices(const Tiling& t, FlipDir dir);

// Elementary move at a vertex: rotates the three lozenges around it and
// changes its height by +-3.  Errors: NotFlippable.
Tiling flip(const Tiling& t, int vertex_idx);

// All tilings by exhaustive search, two independent ways (used to cross-check
// the structured enumeration).  Both return results sorted by height vector;
// empty if the domain is untileable.
std::vector<Tiling> all_tilings_by_flips(const DomainPtr& domain);
std::vector<Tiling> all_tilings_by_cover_search(const DomainPtr& domain);

}  // namespace lozenge
