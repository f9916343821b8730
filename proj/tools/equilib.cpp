// Command-line front end: analysis, constructions, charts and surveys.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "equilib/constructions.hpp"
#include "equilib/io.hpp"

using namespace equilib;

namespace {

constexpr int kOk = 0, kFailure = 1, kDegenerate = 2;

std::pair<int, int> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("expected A,B but got '" + s + "'");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

Vec3 parse_point(const std::string& s) {
  std::vector<Scalar> xs;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) xs.push_back(parse_scalar(cur));
  if (xs.size() != 3) throw Error(ErrorKind::ParseError, "reference point needs x,y,z");
  return {xs[0], xs[1], xs[2]};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EQUILIB_SEED")) return std::stoull(env);
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

int analyze_cmd(const std::string& in, const std::string& ref, const std::string& json) {
  std::string text = read_file(in);
  Polyhedron p = parse_off(text);
  std::optional<Vec3> c;
  if (!ref.empty()) c = parse_point(ref);
  EquilibriumReport r = analyze(p, c);
  if (!json.empty()) write_file(json, report_json(p, r, sha256_hex(text)));
  std::cout << "(f,v,e) = (" << r.f() << "," << r.v() << "," << r.e() << ")\n";
  std::cout << "(S,U,H) = (" << r.S << "," << r.U << "," << r.H << ")\n";
  if (r.degenerate) {
    std::cout << "degenerate sites:";
    for (const Site& s : r.degenerate_sites()) std::cout << " " << to_string(s.type) << " " << s.index;
    std::cout << "\n";
    return kDegenerate;
  }
  std::cout << "C = " << r.complexity() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static equilibria of convex polyhedra"};
  app.require_subcommand(1);

  std::string in, ref, json, out, cls, recipe, max, csv, svg;
  bool decimal = false, asym = false, tetra = false;
  long trials = 1000;
  std::uint64_t seed = default_seed();
  unsigned threads = 0;
  int m = 9;
  std::string a = "1", b = "20", rho = "0";

  auto* analyze = app.add_subcommand("analyze", "classify the equilibria of an OFF polyhedron");
  analyze->add_option("input", in, "OFF file")->required();
  analyze->add_option("--ref", ref, "reference point x,y,z (default: centroid)");
  analyze->add_option("--json", json, "write the analysis report");

  auto* construct = app.add_subcommand("construct", "build a witness of class (S,U)");
  construct->add_option("--class", cls, "S,U")->required();
  construct->add_option("--recipe", recipe, "write the replayable recipe");
  construct->add_option("--out", out, "OFF output (default: stdout)");
  construct->add_flag("--decimal", decimal, "decimal coordinates (lossy)");
  construct->add_option("--seed", seed, "search seed");

  auto* replay_cmd = app.add_subcommand("replay", "rebuild a polyhedron from a recipe");
  replay_cmd->add_option("recipe", recipe, "recipe file")->required();
  replay_cmd->add_option("--out", out, "OFF output (default: stdout)");

  auto* grid_cmd = app.add_subcommand("grid", "bounds on C(S,U) as CSV and SVG");
  grid_cmd->add_option("--max", max, "S_max,U_max")->required();
  grid_cmd->add_option("--csv", csv, "CSV output")->required();
  grid_cmd->add_option("--svg", svg, "SVG chart");

  auto* polar = app.add_subcommand("polar", "polar dual of an OFF polyhedron");
  polar->add_option("input", in, "OFF file")->required();
  polar->add_option("--ref", ref, "pole x,y,z (default: centroid)");
  polar->add_option("--out", out, "OFF output (default: stdout)");
  polar->add_flag("--decimal", decimal, "decimal coordinates (lossy)");

  auto* conway = app.add_subcommand("conway", "mono-stable prism over the spiral polygon");
  conway->add_option("--m", m, "spiral steps; the polygon has 2m-1 sides");
  conway->add_option("--a", a, "thickness at the top");
  conway->add_option("--b", b, "thickness slope");
  conway->add_option("--rho", rho, "cap rotation");
  conway->add_option("--out", out, "OFF output (default: stdout)");
  conway->add_flag("--decimal", decimal, "decimal coordinates (lossy)");

  auto* mono = app.add_subcommand("mono-pyramid", "mono-unstable pyramid over the spiral polygon");
  mono->add_flag("--asym", asym, "move the apex off the symmetry plane: (2,1) instead of (3,1)");
  mono->add_option("--out", out, "OFF output (default: stdout)");
  mono->add_flag("--decimal", decimal, "decimal coordinates (lossy)");

  auto* survey = app.add_subcommand("survey", "classify random tetrahedra");
  survey->add_flag("--tetra", tetra, "sample tetrahedra")->required();
  survey->add_option("--trials", trials, "number of tetrahedra");
  survey->add_option("--seed", seed, "master seed");
  survey->add_option("--threads", threads, "worker threads (0: all cores)");
  survey->add_option("--json", json, "JSON output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailure;
  }

  try {
    if (*analyze) return analyze_cmd(in, ref, json);
    if (*construct) {
      auto [S, U] = parse_pair(cls);
      BuildOptions opt;
      opt.search.seed = seed;
      Witness w = build_class(S, U, opt);
      emit(emit_off(w.poly, decimal), out);
      if (!recipe.empty()) write_file(recipe, to_text(w.recipe));
      std::cerr << "route: " << w.route << "\n";
      return kOk;
    }
    if (*replay_cmd) {
      Polyhedron p = replay(parse_recipe(read_file(recipe)));
      std::string text = emit_off(p);
      emit(text, out);
      std::cerr << "sha256: " << sha256_hex(text) << "\n";
      return kOk;
    }
    if (*grid_cmd) {
      auto [S, U] = parse_pair(max);
      auto cells = grid(S, U);
      write_file(csv, grid_csv(cells));
      if (!svg.empty()) write_file(svg, grid_svg(cells));
      return kOk;
    }
    if (*polar) {
      Polyhedron p = parse_off(read_file(in));
      Vec3 o = ref.empty() ? mass_properties(p).centroid : parse_point(ref);
      emit(emit_off(polar_dual(p, o), decimal), out);
      return kOk;
    }
    if (*conway) {
      ConwayParams cp;
      cp.m = m;
      cp.a = parse_scalar(a);
      cp.b = parse_scalar(b);
      cp.rho = parse_scalar(rho);
      emit(emit_off(conway_solid(cp), decimal), out);
      return kOk;
    }
    if (*mono) {
      emit(emit_off(mono_unstable_pyramid({}, !asym), decimal), out);
      return kOk;
    }
    if (*survey) {
      SurveyResult r = tetrahedron_survey(trials, seed, threads);
      emit(survey_json(r), json);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::DegenerateEquilibria ? kDegenerate : kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
