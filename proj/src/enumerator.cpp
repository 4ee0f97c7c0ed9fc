#include "lozenge/enumerator.hpp"

#include <algorithm>
#include <set>

#include "lozenge/error.hpp"

namespace lozenge {

ZoneEnumeration enumerate_zone(const ZoneCtx& ctx, size_t zone_index,
                               std::vector<SeedRecord>* seed_log) {
  std::vector<Tiling> chain = dk_chain(ctx);

  std::vector<Tiling> generated{ctx.t_min};
  std::set<std::vector<int>> seen{ctx.t_min.heights.values};

  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    std::vector<Seed> seeds = proper_seeds(find_seeds(ctx, chain[k]));
    if (seeds.empty())
      fail(Errc::Internal, "saturation step without seeds");
    if (seed_log)
      for (const Seed& s : seeds)
        seed_log->push_back(
            {zone_index, static_cast<int>(k), s.center, s.shape});

    // Per-seed fillings by increasing weight; index 0 is the empty filling.
    std::vector<std::vector<Pile>> fillings(seeds.size());
    for (size_t i = 0; i < seeds.size(); ++i)
      fillings[i] = all_limited_plane_partitions(seeds[i].shape);

    std::vector<size_t> pick(seeds.size(), 0);
    while (true) {
      // Next mixed-radix combination; the all-empty one adds nothing.
      size_t carry = 0;
      while (carry < pick.size() &&
             ++pick[carry] == fillings[carry].size()) {
        pick[carry] = 0;
        ++carry;
      }
      if (carry == pick.size()) break;

      std::vector<Cube> cubes;
      for (size_t i = 0; i < seeds.size(); ++i) {
        if (pick[i] == 0) continue;
        std::vector<Cube> part =
            filling_cubes(ctx, seeds[i], fillings[i][pick[i]]);
        cubes.insert(cubes.end(), part.begin(), part.end());
      }

      // Least tiling containing the combined filling; removing the filling
      // again bounds from below the tilings it can sit on.
      Tiling least = min_with_cubes(ctx, cubes);
      HeightFunction floor = least.heights;
      for (const Cube& c : cubes)
        floor.values[ctx.domain->vertex_index(c.center)] -= 3;

      // Tilings appended during this family carry boxes the bound below
      // excludes, but the vector may reallocate, so index explicitly.
      const size_t upto = generated.size();
      for (size_t gi = 0; gi < upto; ++gi) {
        Cmp lo = compare(floor, generated[gi].heights);
        if (lo != Cmp::Less && lo != Cmp::Equal) continue;
        Cmp hi = compare(generated[gi].heights, chain[k].heights);
        if (hi != Cmp::Less && hi != Cmp::Equal) continue;

        Tiling fresh = generated[gi];
        for (const Cube& c : cubes)
          fresh.heights.values[ctx.domain->vertex_index(c.center)] += 3;
        try {
          validate(fresh.heights);
        } catch (const Error& e) {
          fail(Errc::Internal,
               std::string("generated heights are invalid: ") + e.what());
        }
        if (!seen.insert(fresh.heights.values).second)
          fail(Errc::DuplicateDetected,
               "tiling generated twice in zone " + std::to_string(zone_index));
        generated.push_back(std::move(fresh));
      }
    }
  }

  ZoneEnumeration out{ctx, std::move(generated), {}};
  // Building the cover lattice also proves completeness: a missing tiling
  // would show up as a move leaving the generated set.
  out.lattice = build_lattice(ctx.domain, out.tilings);
  return out;
}

Enumeration enumerate_tilings(const DomainPtr& domain,
                              std::vector<SeedRecord>* seed_log) {
  Enumeration e;
  e.domain = domain;
  e.fracture = fracture(domain);
  e.count = 1;
  for (size_t z = 0; z < e.fracture.zones.size(); ++z) {
    ZoneCtx ctx = make_zone_ctx(e.fracture.zones[z]);
    e.zones.push_back(enumerate_zone(ctx, z, seed_log));
    e.count *= e.zones.back().tilings.size();
  }
  return e;
}

void stream_tilings(const Enumeration& e,
                    const std::function<void(const Tiling&)>& emit) {
  // Zone vertex index -> full-domain index, and per-zone base offset.
  struct ZoneMap {
    std::vector<int> full_index;
    int offset = 0;
  };
  std::vector<ZoneMap> maps(e.zones.size());
  for (size_t z = 0; z < e.zones.size(); ++z) {
    const auto& zd = e.zones[z].ctx.domain;
    maps[z].offset =
        e.fracture.h_min.values[e.domain->vertex_index(zd->start())];
    for (Vertex v : zd->vertices())
      maps[z].full_index.push_back(e.domain->vertex_index(v));
  }

  std::vector<size_t> pick(e.zones.size(), 0);
  while (true) {
    HeightFunction h = e.fracture.h_min;
    for (size_t z = 0; z < e.zones.size(); ++z) {
      const auto& t = e.zones[z].tilings[pick[z]];
      for (size_t i = 0; i < t.heights.values.size(); ++i)
        h.values[maps[z].full_index[i]] =
            maps[z].offset + t.heights.values[i];
    }
    emit(tiling_from_height(std::move(h)));
    size_t z = 0;
    while (z < e.zones.size() &&
           ++pick[z] == e.zones[z].tilings.size()) {
      pick[z] = 0;
      ++z;
    }
    if (z == e.zones.size()) break;
  }
}

Lattice full_lattice(const Enumeration& e) {
  std::vector<Lattice> zones;
  for (const auto& z : e.zones) zones.push_back(z.lattice);
  return product(e.domain, e.fracture.h_min, zones);
}

}  // namespace lozenge
