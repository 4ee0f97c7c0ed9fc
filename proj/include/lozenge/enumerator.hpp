// Structured enumeration of all tilings.
//
// The domain is fractured into independent fertile zones.  Within a zone,
// tilings are generated along the saturation chain: at each step every
// combined filling of the proper seeds is added on top of every previously
// generated tiling it is compatible with.  Each tiling of the zone is
// produced exactly once (a repeat is a hard error), and the zone results are
// combined as a cartesian product.

#pragma once

#include <cstdint>
#include <functional>

#include "lozenge/fracture.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/seeds.hpp"

namespace lozenge {

struct SeedRecord {
  size_t zone = 0;  // zone index within the fracture
  int step = 0;     // saturation-chain step the seed was found at
  Vertex center;
  Pile shape;
};

struct ZoneEnumeration {
  ZoneCtx ctx;
  std::vector<Tiling> tilings;  // generation order, starting at the minimum
  Lattice lattice;              // cover lattice over exactly those tilings
};

// Errors: Untileable, NotFertile, DuplicateDetected (a tiling was generated
// twice; indicates an internal inconsistency and is never expected).
ZoneEnumeration enumerate_zone(const ZoneCtx& ctx, size_t zone_index = 0,
                               std::vector<SeedRecord>* seed_log = nullptr);

struct Enumeration {
  DomainPtr domain;
  Fracture fracture;
  std::vector<ZoneEnumeration> zones;
  std::uint64_t count = 0;  // product of the zone counts
};

// Errors: Untileable (plus anything enumerate_zone raises).
Enumeration enumerate_tilings(const DomainPtr& domain,
                              std::vector<SeedRecord>* seed_log = nullptr);

// Walks all full-domain tilings (zone choices over the frozen part) without
// materializing them: one is built and passed to `emit` at a time.
void stream_tilings(const Enumeration& e,
                    const std::function<void(const Tiling&)>& emit);

// Cover lattice of the full domain, combined from the zone lattices.
Lattice full_lattice(const Enumeration& e);

}  // namespace lozenge
