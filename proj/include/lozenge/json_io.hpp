// JSON encodings used by the command-line tool.
//
//   vertex   [p, q]
//   lozenge  {"d": "a"|"b"|"c", "anchor": [p, q]}
//   domain   {"contour": "abA...", "start": [p, q]}
//   tiling   {"lozenges": [lozenge, ...]}
//   heights  [[p, q, h], ...] in vertex order

#pragma once

#include <json.hpp>

#include "lozenge/tiling.hpp"

namespace lozenge {

nlohmann::json to_json(Vertex v);
Vertex vertex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Lozenge& l);
Lozenge lozenge_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Domain& d);
DomainPtr domain_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Tiling& t);
Tiling tiling_from_json(const DomainPtr& domain, const nlohmann::json& j);

nlohmann::json heights_to_json(const HeightFunction& h);

}  // namespace lozenge
