#include "lozenge/json_io.hpp"

#include "lozenge/error.hpp"

namespace lozenge {

using nlohmann::json;

json to_json(Vertex v) { return json::array({v.p, v.q}); }

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    fail(Errc::BadLetter, "vertex must be [p, q]");
  return {j[0].get<int>(), j[1].get<int>()};
}

json to_json(const Lozenge& l) {
  return json{{"d", std::string(1, l.diagonal)}, {"anchor", to_json(l.anchor)}};
}

Lozenge lozenge_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("anchor"))
    fail(Errc::BadLetter, "lozenge must be {\"d\", \"anchor\"}");
  std::string d = j["d"].get<std::string>();
  if (d != "a" && d != "b" && d != "c")
    fail(Errc::BadLetter, "lozenge diagonal must be a, b or c");
  return {d[0], vertex_from_json(j["anchor"])};
}

json to_json(const Domain& d) {
  return json{{"contour", d.contour_word()}, {"start", to_json(d.start())}};
}

DomainPtr domain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("contour"))
    fail(Errc::BadLetter, "domain must be {\"contour\"[, \"start\"]}");
  Vertex start{0, 0};
  if (j.contains("start")) start = vertex_from_json(j["start"]);
  return enclose(trace(parse_contour(j["contour"].get<std::string>()), start));
}

json to_json(const Tiling& t) {
  json arr = json::array();
  for (const Lozenge& l : t.lozenges()) arr.push_back(to_json(l));
  return json{{"lozenges", std::move(arr)}};
}

Tiling tiling_from_json(const DomainPtr& domain, const json& j) {
  if (!j.is_object() || !j.contains("lozenges") || !j["lozenges"].is_array())
    fail(Errc::NotATiling, "tiling must be {\"lozenges\": [...]}");
  std::vector<Lozenge> ls;
  for (const auto& lj : j["lozenges"]) ls.push_back(lozenge_from_json(lj));
  return tiling_from_lozenges(domain, ls);
}

json heights_to_json(const HeightFunction& h) {
  json arr = json::array();
  for (size_t i = 0; i < h.values.size(); ++i) {
    Vertex v = h.domain->vertices()[i];
    arr.push_back(json::array({v.p, v.q, h.values[i]}));
  }
  return arr;
}

}  // namespace lozenge
