// Command-line surface for the tropical curve library: validation, exact
// areas, path decompositions, saturation surgery and vertex-bound
// certificates over the JSON curve document format.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tropgeo/boundary.hpp"
#include "tropgeo/certify.hpp"
#include "tropgeo/curve.hpp"
#include "tropgeo/gallery.hpp"
#include "tropgeo/io.hpp"
#include "tropgeo/paths.hpp"
#include "tropgeo/saturation.hpp"

namespace {

using namespace tropgeo;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot open '" + path + "' for writing");
  out << text;
}

TropicalCurve load_curve(const std::string& path) { return parse_curve(read_input(path)); }

int exit_code_for(const trop_error& e) {
  switch (e.code()) {
    case errc::parse_error:
      return kExitInput;
    default:
      return kExitInternal;
  }
}

TieRule tie_from(const std::string& name) {
  if (name == "id") return TieRule::smallest_id;
  if (name == "lex") return TieRule::lex_direction;
  fail(errc::parse_error, "tie rule must be 'id' or 'lex'");
}

void print_segments(const PathFamily& fam) {
  for (std::size_t p = 0; p < fam.paths.size(); ++p) {
    const auto& path = fam.paths[p];
    std::cout << "path " << p << " entry e" << path.entry_edge << "\n";
    for (const auto& s : path.segments)
      std::cout << "  e" << s.edge_id << " " << format_vec(s.from) << " -> "
                << format_vec(s.to) << " weight " << format_rat(s.weight.scale) << "*"
                << format_ivec(s.weight.base.vec()) << "\n";
    std::cout << "  exit " << format_vec(path.exit_point) << "\n";
  }
  std::cout << "usage:\n";
  for (const auto& [id, k] : fam.usage) std::cout << "  e" << id << " " << k.str() << "\n";
}

int run_validate(const std::string& file, bool lenient) {
  TropicalCurve G = load_curve(file);
  auto rep = validate(G, lenient ? ValidationLevel::lenient : ValidationLevel::strict);
  for (const auto& v : rep.violations) std::cout << v.kind << " " << v.detail << "\n";
  return rep.pass() ? kExitOk : kExitCheckFailed;
}

int run_area(const std::string& file) {
  TropicalCurve G = load_curve(file);
  std::cout << format_rat(curve_area(G)) << "\n";
  return kExitOk;
}

int run_saturate(const std::string& file, const std::string& delta_s,
                 const std::string& out) {
  TropicalCurve G = load_curve(file);
  Rat delta = parse_rat(delta_s);
  auto [Gp, log] = saturate(G, delta);
  Gp.metadata["saturated_from_delta"] = delta_s;
  write_output(out, serialize_curve(Gp));
  std::cerr << "truncations " << log.truncations.size() << " dropped "
            << log.dropped_edges.size() << " retries " << log.retries << "\n";
  return kExitOk;
}

int run_paths(const std::string& file, int dir, const std::string& tie, bool emit) {
  TropicalCurve G = load_curve(file);
  require(dir >= 1 && dir <= G.dim, errc::parse_error, "--dir must be in 1..n");
  PathFamily fam = path_family_for_face(G, dir - 1, tie_from(tie));
  if (emit) {
    for (const auto& path : fam.paths)
      for (const auto& s : path.segments)
        std::cout << format_vec(s.from) << " " << format_vec(s.to) << "\n";
    return kExitOk;
  }
  print_segments(fam);
  return kExitOk;
}

int run_certify(const std::string& file, const std::string& delta_s,
                const std::string& budget_s, bool as_json) {
  TropicalCurve G = load_curve(file);
  Certificate cert = certify(G, parse_rat(delta_s), parse_rat(budget_s));
  if (as_json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  } else {
    for (const auto& c : cert.checks) std::cout << format_check_line(c) << "\n";
    std::cout << "#V=" << cert.restricted_vertex_count << " <= "
              << cert.degree_bound.str() << "\n";
    std::cout << "conjectural castelnuovo bound: "
              << (cert.degree >= 1 ? castelnuovo_bound(cert.degree, cert.n).str() : "n/a")
              << "\n";
  }
  return cert.pass ? kExitOk : kExitCheckFailed;
}

int run_gen(const std::string& kind, int n, const std::string& apex_s, int levels,
            std::uint64_t seed, int complexity, const std::string& out, bool emit) {
  TropicalCurve G = [&] {
    if (kind == "line") {
      RatVec apex;
      if (apex_s.empty()) {
        apex.assign(n, Rat(1, n + 1));
      } else {
        std::stringstream ss(apex_s);
        std::string tok;
        while (std::getline(ss, tok, ',')) apex.push_back(parse_rat(tok));
      }
      return gen_tropical_line(n, apex);
    }
    if (kind == "example7") return gen_example7(levels);
    if (kind == "random") return gen_random_balanced(n, seed, complexity);
    fail(errc::parse_error, "unknown generator '" + kind + "'");
  }();
  if (emit) {
    for (const auto& e : G.edges) {
      auto ext = clipped_extent(e, G.region);
      if (ext) std::cout << format_vec(ext->base) << " " << format_vec(ext->end()) << "\n";
    }
    return kExitOk;
  }
  write_output(out, serialize_curve(G));
  return kExitOk;
}

int run_slice(const std::string& file, int dir, const std::string& at) {
  TropicalCurve G = load_curve(file);
  require(dir >= 1 && dir <= G.dim, errc::parse_error, "--dir must be in 1..n");
  Rat zeta = parse_rat(at);
  Int density = measure_density(G, dir - 1, zeta);
  Int prediction = density_prediction(G, dir - 1, zeta);
  std::cout << "density " << density.str() << "\n";
  std::cout << "crossing-sum " << prediction.str() << "\n";
  return density == prediction ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropical curve toolkit"};
  app.require_subcommand(1);

  std::string file = "-", out = "-", delta = "1/4", budget = "1", apex, tie = "id", at;
  int dir = 1, n = 2, levels = 1, complexity = 1;
  std::uint64_t seed = 0;
  bool lenient = false, strict = false, as_json = false, emit = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a curve document");
  validate_cmd->add_option("file", file);
  validate_cmd->add_flag("--strict", strict);
  validate_cmd->add_flag("--lenient", lenient);

  auto* area_cmd = app.add_subcommand("area", "exact tropical area");
  area_cmd->add_option("file", file);

  auto* saturate_cmd = app.add_subcommand("saturate", "saturation surgery");
  saturate_cmd->add_option("file", file);
  saturate_cmd->add_option("--delta", delta)->required();
  saturate_cmd->add_option("-o,--output", out);

  auto* paths_cmd = app.add_subcommand("paths", "capacity path decomposition");
  paths_cmd->add_option("file", file);
  paths_cmd->add_option("--dir", dir)->required();
  paths_cmd->add_option("--tie", tie);
  paths_cmd->add_flag("--emit-segments", emit);

  auto* certify_cmd = app.add_subcommand("certify", "vertex-bound certificate");
  certify_cmd->add_option("file", file);
  certify_cmd->add_option("--delta", delta)->required();
  certify_cmd->add_option("--area-budget", budget)->required();
  certify_cmd->add_flag("--json", as_json);

  auto* gen_cmd = app.add_subcommand("gen", "generate gallery curves");
  std::string kind;
  gen_cmd->add_option("kind", kind)->required();
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--apex", apex);
  gen_cmd->add_option("--levels", levels);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--complexity", complexity);
  gen_cmd->add_option("-o,--output", out);
  gen_cmd->add_flag("--emit-segments", emit);

  auto* slice_cmd = app.add_subcommand("slice", "area measure density at a slice");
  slice_cmd->add_option("file", file);
  slice_cmd->add_option("--dir", dir)->required();
  slice_cmd->add_option("--at", at)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return run_validate(file, lenient);
    if (area_cmd->parsed()) return run_area(file);
    if (saturate_cmd->parsed()) return run_saturate(file, delta, out);
    if (paths_cmd->parsed()) return run_paths(file, dir, tie, emit);
    if (certify_cmd->parsed()) return run_certify(file, delta, budget, as_json);
    if (gen_cmd->parsed()) return run_gen(kind, n, apex, levels, seed, complexity, out, emit);
    if (slice_cmd->parsed()) return run_slice(file, dir, at);
  } catch (const trop_error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
