// lozenge-forge: tileability, extremal tilings, exhaustive enumeration and
// pictures for triangular-grid domains.
//
// Exit codes: 0 success, 1 domain is untileable, 2 bad input or usage.
// All machine output is line-delimited JSON with sorted keys; runs are
// byte-deterministic.  Set LOZENGE_FORGE_SEED_LOG=1 to trace the seeds used
// by the enumeration on stderr.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lozenge/enumerator.hpp"
#include "lozenge/error.hpp"
#include "lozenge/json_io.hpp"
#include "lozenge/render.hpp"

namespace {

using namespace lozenge;
using nlohmann::json;

struct DomainOpts {
  std::string contour;
  std::string start = "0,0";
  std::string file;
  std::string hex;
};

void add_domain_opts(CLI::App* cmd, DomainOpts& o) {
  cmd->add_option("--contour", o.contour,
                  "boundary word over a,b,c,A,B,C (counterclockwise)");
  cmd->add_option("--start", o.start, "contour start vertex \"p,q\"");
  cmd->add_option("--domain", o.file, "JSON file with {\"contour\",\"start\"}");
  cmd->add_option("--hexagon", o.hex, "hexagon side lengths \"x,y,z\"");
}

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

DomainPtr resolve_domain(const DomainOpts& o) {
  int given = (!o.contour.empty()) + (!o.file.empty()) + (!o.hex.empty());
  if (given != 1)
    fail(Errc::Empty,
         "give exactly one of --contour, --domain, --hexagon");
  if (!o.hex.empty()) {
    auto xyz = parse_ints(o.hex, ',');
    if (xyz.size() != 3) fail(Errc::BadSize, "--hexagon wants \"x,y,z\"");
    return hexagon(xyz[0], xyz[1], xyz[2]);
  }
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) fail(Errc::Empty, "cannot open " + o.file);
    json j;
    in >> j;
    return domain_from_json(j);
  }
  auto pq = parse_ints(o.start, ',');
  if (pq.size() != 2) fail(Errc::BadSize, "--start wants \"p,q\"");
  return enclose(trace(parse_contour(o.contour), Vertex{pq[0], pq[1]}));
}

void print_tiling(const Tiling& t, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(t).dump() << "\n";
  } else if (format == "height") {
    std::cout << heights_to_json(t.heights).dump() << "\n";
  } else if (format == "ascii") {
    std::cout << render_ascii(t);
  } else if (format == "svg") {
    std::cout << render_svg(t);
  } else {
    fail(Errc::Empty, "unknown format " + format);
  }
}

void dump_seed_log(const std::vector<SeedRecord>& log) {
  if (const char* flag = std::getenv("LOZENGE_FORGE_SEED_LOG");
      !flag || std::string(flag) != "1")
    return;
  for (const SeedRecord& r : log) {
    json j{{"zone", r.zone},
           {"step", r.step},
           {"center", to_json(r.center)},
           {"shape", r.shape}};
    std::cerr << j.dump() << "\n";
  }
}

Pile parse_pile(const std::string& text) {
  Pile out;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) out.push_back(parse_ints(row, ','));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Lozenge tilings of triangular-grid domains: decide, build, count, "
      "enumerate and draw."};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker count (accepted; runs serially)");

  DomainOpts dom;
  std::string format = "json";
  std::string which = "min";
  std::string lattice_file;
  std::string tiling_file;
  std::string limit_text;
  std::string pile_text;
  int weight_target = -1;
  bool stats = false;

  auto* check = app.add_subcommand("check", "decide tileability");
  add_domain_opts(check, dom);

  auto* cmd_min = app.add_subcommand("min", "print the minimal tiling");
  add_domain_opts(cmd_min, dom);
  cmd_min->add_option("--format", format, "json|height|ascii|svg");

  auto* cmd_max = app.add_subcommand("max", "print the maximal tiling");
  add_domain_opts(cmd_max, dom);
  cmd_max->add_option("--format", format, "json|height|ascii|svg");

  auto* count = app.add_subcommand("count", "count all tilings");
  add_domain_opts(count, dom);

  auto* enumerate = app.add_subcommand("enumerate", "list every tiling once");
  add_domain_opts(enumerate, dom);
  enumerate->add_option("--format", format, "json|height|ascii");
  enumerate->add_option("--lattice", lattice_file,
                        "also write the move lattice as DOT to this file");
  enumerate->add_flag("--stats", stats, "append a summary line");

  auto* lattice_cmd =
      app.add_subcommand("lattice", "print the move lattice as DOT");
  add_domain_opts(lattice_cmd, dom);

  auto* fracture_cmd = app.add_subcommand(
      "fracture", "split into frozen tiles and fertile zones");
  add_domain_opts(fracture_cmd, dom);

  auto* seeds_cmd =
      app.add_subcommand("seeds", "list the seeds the enumeration uses");
  add_domain_opts(seeds_cmd, dom);

  auto* partitions_cmd = app.add_subcommand(
      "partitions", "bounded partitions / bounded piles by weight");
  partitions_cmd->add_option("--limit", limit_text,
                             "part limits \"p1,p2,...\" (weakly decreasing)");
  partitions_cmd->add_option("--pile", pile_text,
                             "bounding pile \"r1c1,r1c2;r2c1,...\"");
  partitions_cmd->add_option("--weight", weight_target, "total weight");

  auto* render_cmd = app.add_subcommand("render", "draw a tiling");
  add_domain_opts(render_cmd, dom);
  render_cmd->add_option("--format", format, "ascii|svg");
  render_cmd->add_option("--which", which, "min|max");
  render_cmd->add_option("--tiling", tiling_file,
                         "JSON file with {\"lozenges\": [...]}");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    DomainPtr d = resolve_domain(dom);
    bool tileable = true;
    try {
      extremal_tiling(d, Extremal::Minimal);
    } catch (const Error& e) {
      if (e.code() != Errc::Untileable) throw;
      tileable = false;
    }
    json j{{"tileable", tileable},
           {"triangles", d->triangles().size()},
           {"vertices", d->vertices().size()}};
    std::cout << j.dump() << "\n";
    return tileable ? 0 : 1;
  }

  if (cmd_min->parsed() || cmd_max->parsed()) {
    DomainPtr d = resolve_domain(dom);
    Tiling t = extremal_tiling(
        d, cmd_min->parsed() ? Extremal::Minimal : Extremal::Maximal);
    print_tiling(t, format);
    return 0;
  }

  if (count->parsed()) {
    DomainPtr d = resolve_domain(dom);
    std::vector<SeedRecord> log;
    Enumeration e = enumerate_tilings(d, &log);
    dump_seed_log(log);
    json j{{"count", e.count}, {"zones", e.zones.size()}};
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (enumerate->parsed()) {
    DomainPtr d = resolve_domain(dom);
    std::vector<SeedRecord> log;
    Enumeration e = enumerate_tilings(d, &log);
    dump_seed_log(log);
    stream_tilings(e, [&](const Tiling& t) { print_tiling(t, format); });
    if (!lattice_file.empty()) {
      std::ofstream out(lattice_file);
      if (!out) fail(Errc::Empty, "cannot write " + lattice_file);
      out << to_dot(full_lattice(e));
    }
    if (stats) {
      json j{{"stats",
              json{{"count", e.count},
                   {"zones", e.zones.size()},
                   {"frozen", e.fracture.frozen.size()},
                   {"seeds", log.size()}}}};
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  if (lattice_cmd->parsed()) {
    DomainPtr d = resolve_domain(dom);
    std::cout << to_dot(full_lattice(enumerate_tilings(d)));
    return 0;
  }

  if (fracture_cmd->parsed()) {
    DomainPtr d = resolve_domain(dom);
    Fracture f = fracture(d);
    json frozen = json::array();
    for (const Lozenge& l : f.frozen) frozen.push_back(to_json(l));
    json zones = json::array();
    for (const DomainPtr& z : f.zones) zones.push_back(to_json(*z));
    json j{{"frozen", std::move(frozen)},
           {"zones", std::move(zones)},
           {"solid_vertices", f.solid.size()}};
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (seeds_cmd->parsed()) {
    DomainPtr d = resolve_domain(dom);
    std::vector<SeedRecord> log;
    enumerate_tilings(d, &log);
    for (const SeedRecord& r : log) {
      json j{{"zone", r.zone},
             {"step", r.step},
             {"center", to_json(r.center)},
             {"shape", r.shape}};
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  if (partitions_cmd->parsed()) {
    if (limit_text.empty() == pile_text.empty())
      fail(Errc::Empty, "give exactly one of --limit, --pile");
    if (!limit_text.empty()) {
      if (weight_target < 0) fail(Errc::BadSize, "--weight is required");
      limited_partitions(parse_ints(limit_text, ','), weight_target,
                         [](const std::vector<int>& parts) {
                           std::cout << json(parts).dump() << "\n";
                         });
    } else {
      Pile bound = parse_pile(pile_text);
      auto emit = [](const Pile& a) { std::cout << json(a).dump() << "\n"; };
      if (weight_target < 0) {
        for (const Pile& a : all_limited_plane_partitions(bound)) emit(a);
      } else {
        limited_plane_partitions(bound, weight_target, emit);
      }
    }
    return 0;
  }

  if (render_cmd->parsed()) {
    DomainPtr d = resolve_domain(dom);
    if (format == "json") format = "ascii";
    Tiling t = [&] {
      if (!tiling_file.empty()) {
        std::ifstream in(tiling_file);
        if (!in) fail(Errc::Empty, "cannot open " + tiling_file);
        json j;
        in >> j;
        return tiling_from_json(d, j);
      }
      if (which != "min" && which != "max")
        fail(Errc::Empty, "--which must be min or max");
      return extremal_tiling(
          d, which == "min" ? Extremal::Minimal : Extremal::Maximal);
    }();
    print_tiling(t, format);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lozenge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == lozenge::Errc::Untileable ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
