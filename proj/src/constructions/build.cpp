#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "equilib/complexity.hpp"
#include "equilib/constructions.hpp"
#include "internal.hpp"

namespace equilib {

using namespace detail;

namespace {

constexpr size_t kMaxSites = 6;

struct Chain {
  Polyhedron poly;
  Recipe recipe;
  std::vector<std::string> route;
  std::set<Vec3> fresh;  // vertices created by the last step

  void push(Built b) {
    std::set<Vec3> before(poly.vertices.begin(), poly.vertices.end());
    fresh.clear();
    for (const Vec3& v : b.poly.vertices)
      if (!before.count(v)) fresh.insert(v);
    poly = std::move(b.poly);
    route.push_back(b.step.name);
    recipe.steps.push_back(std::move(b.step));
  }
};

Chain start(const BaseSolid& base, const std::string& label) {
  Chain c;
  c.recipe.base = base;
  c.poly = build_base(base);
  c.route.push_back(label);
  return c;
}

Chain from_catalog(int S, int U) {
  return start({"catalog", {Scalar(S), Scalar(U)}}, "catalog(" + std::to_string(S) + "," + std::to_string(U) + ")");
}

Chain from_pyramid(int S) {
  Scalar h = pyramid_height(S, 1);
  return start({"pyramid", {Scalar(S), h}}, "pyramid(" + std::to_string(S) + ")");
}

BaseSolid conway_base(const Scalar& rho) {
  ConwayParams cp;
  return {"conway", {Scalar(cp.m), cp.r0, cp.a, cp.b, rho}};
}

BaseSolid mono_base(const Scalar& x, const Scalar& tilt) {
  ConwayParams cp;
  return {"mono_pyramid", {Scalar(cp.m), cp.r0, x, cp.apex_y, cp.apex_h, tilt}};
}

// Runs `attempt` on candidates until one succeeds; rethrows the last failure.
template <class Site>
void try_sites(Chain& c, const std::vector<Site>& sites, const std::string& what,
               const std::function<Built(const Site&)>& attempt) {
  std::string last = "no admissible site";
  for (size_t i = 0; i < sites.size() && i < kMaxSites; ++i) {
    try {
      c.push(attempt(sites[i]));
      return;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ClassNotAchieved && e.kind() != ErrorKind::ConditionViolated) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::ClassNotAchieved, what + ": " + last);
}

void step_truncate(Chain& c, const SearchParams& sp) {
  EquilibriumReport r = analyze(c.poly);
  Topology t = topology(c.poly);
  std::vector<std::pair<std::pair<int, double>, int>> cand;
  for (int v = 0; v < c.poly.v(); ++v) {
    if (degree(t, v) != 3 || r.vertices[static_cast<size_t>(v)] != Kind::Unstable) continue;
    int pref = c.fresh.count(c.poly.vertices[static_cast<size_t>(v)]) ? 0 : 1;
    cand.push_back({{pref, -r.vertex_margin[static_cast<size_t>(v)]}, v});
  }
  std::sort(cand.begin(), cand.end());
  std::vector<int> sites;
  for (auto& x : cand) sites.push_back(x.second);
  Polyhedron p = c.poly;
  try_sites<int>(c, sites, "truncate_vertex", [&](const int& v) { return truncate_vertex(p, v, sp); });
}

void step_erect(Chain& c, const SearchParams& sp) {
  EquilibriumReport r = analyze(c.poly);
  std::vector<std::pair<std::pair<int, double>, int>> cand;
  for (int f = 0; f < c.poly.f(); ++f) {
    const Cycle& cyc = c.poly.faces[static_cast<size_t>(f)];
    if (cyc.size() != 3 || r.faces[static_cast<size_t>(f)] != Kind::Stable) continue;
    bool fresh = false;
    for (int v : cyc) fresh = fresh || c.fresh.count(c.poly.vertices[static_cast<size_t>(v)]);
    cand.push_back({{fresh ? 0 : 1, -r.face_margin[static_cast<size_t>(f)]}, f});
  }
  std::sort(cand.begin(), cand.end());
  std::vector<int> sites;
  for (auto& x : cand) sites.push_back(x.second);
  Polyhedron p = c.poly;
  try_sites<int>(c, sites, "erect_tetrahedron", [&](const int& f) { return erect_tetrahedron(p, f, sp); });
}

void step_face_truncate(Chain& c, const SearchParams& sp, bool one_sided) {
  Polyhedron p = c.poly;
  try_sites<TruncationSite>(c, truncation_sites(p, one_sided), one_sided ? "face_truncate_one_sided" : "face_truncate",
                            [&](const TruncationSite& s) { return face_truncate(p, s, sp, one_sided); });
}

void step_vertex_build(Chain& c, const SearchParams& sp, bool one_sided) {
  Polyhedron p = c.poly;
  try_sites<BuildSite>(c, build_sites(p), one_sided ? "vertex_build_one_sided" : "vertex_build",
                       [&](const BuildSite& s) { return vertex_build(p, s, sp, one_sided); });
}

// Minimal polyhedron for a polyhedral pair.
Chain pair_witness(int S, int U, const SearchParams& sp) {
  if (S == U) return S == 4 ? from_catalog(4, 4) : from_pyramid(S);
  if (U > S) {
    int k = U - S, S0 = S - k;
    Chain c = from_pyramid(S0);
    for (int i = 0; i < k; ++i) step_truncate(c, sp);
    return c;
  }
  int k = S - U, S0 = U - k;
  Chain c = from_pyramid(S0);
  for (int i = 0; i < k; ++i) step_erect(c, sp);
  return c;
}

// The regular tetrahedron is too symmetric for vertex builds.
Chain generic_tetrahedron() {
  BaseSolid b{"hull", {}};
  for (const char* x : {"11/10", "1", "1", "1", "-1", "-9/10", "-1", "6/5", "-1", "-1", "-1", "1"})
    b.params.push_back(parse_scalar(x));
  return start(b, "tetrahedron(4,4)");
}

using Route = std::function<Chain()>;

// Many unstable points: simple base, then face truncations.
std::vector<Route> many_unstable(int S, int U, const SearchParams& sp) {
  int U0 = S >= 5 ? 2 * S - 4 : 4;
  int d = U - U0;
  auto base = [=, &sp](int u) { return S >= 5 ? pair_witness(S, u, sp) : from_catalog(S, u); };
  auto cut = [=, &sp](Chain c, int full, bool one) {
    for (int i = 0; i < full; ++i) step_face_truncate(c, sp, false);
    if (one) step_face_truncate(c, sp, true);
    return c;
  };
  if (d % 2 == 0) return {[=] { return cut(base(U0), d / 2, false); }};
  Route odd_base = [=] { return cut(base(U0 + (S >= 5 ? -1 : 1)), (S >= 5 ? d + 1 : d - 1) / 2, false); };
  Route one_sided = [=] { return cut(base(U0), d / 2, true); };
  if (S >= 5) return {one_sided, odd_base};
  return {odd_base, one_sided};
}

// Many stable points: the dual construction with vertex builds.
std::vector<Route> many_stable(int S, int U, const SearchParams& sp) {
  int S0 = U >= 5 ? 2 * U - 4 : 4;
  int d = S - S0;
  auto base = [=, &sp](int s) {
    if (U >= 5) return pair_witness(s, U, sp);
    return s == 4 && U == 4 ? generic_tetrahedron() : from_catalog(s, U);
  };
  auto build = [=, &sp](Chain c, int full, bool one) {
    for (int i = 0; i < full; ++i) step_vertex_build(c, sp, false);
    if (one) step_vertex_build(c, sp, true);
    return c;
  };
  if (d % 2 == 0) return {[=] { return build(base(S0), d / 2, false); }};
  Route odd_base = [=] { return build(base(S0 + (U >= 5 ? -1 : 1)), (U >= 5 ? d + 1 : d - 1) / 2, false); };
  Route one_sided = [=] { return build(base(S0), d / 2, true); };
  return {odd_base, one_sided};
}

std::vector<Route> monostatic(int S, int U, const SearchParams& sp) {
  const Scalar rho = rational(3, 1000), tilt = rational(3, 1000);
  if (S == 1 && U == 4) return {[] { return start(conway_base(0), "conway"); }};
  if (S == 1) {
    return {[=, &sp] {
      Chain c = start(conway_base(rho), "conway(rotated)");
      int d = U - 4;
      if (d % 2) step_face_truncate(c, sp, true);
      for (int i = 0; i < d / 2; ++i) step_face_truncate(c, sp, false);
      return c;
    }};
  }
  if (S == 2) return {[] { return start(mono_base(rational(1, 100), 0), "spiral pyramid(asymmetric)"); }};
  if (S == 3) return {[] { return start(mono_base(0, 0), "spiral pyramid"); }};
  return {[=, &sp] {
    Chain c = start(mono_base(0, tilt), "spiral pyramid(tilted)");
    int d = S - 3;
    for (int i = 0; i < d / 2; ++i) step_vertex_build(c, sp, false);
    if (d % 2) step_vertex_build(c, sp, true);
    return c;
  }};
}

std::string describe(const Chain& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.route.size(); ++i) os << (i ? " + " : "") << c.route[i];
  return os.str();
}

}  // namespace

Witness build_class(int S, int U, const BuildOptions& opt) {
  if (S < 1 || U < 1 || (S == 1 && U < 4))
    throw Error(ErrorKind::Unsupported, "no construction for class (" + std::to_string(S) + "," +
                                            std::to_string(U) + ")");
  const SearchParams& sp = opt.search;
  check_params(sp);
  std::vector<Route> routes;
  bool exact_cell = S >= 2 && U >= 2;
  if (!exact_cell) {
    routes = monostatic(S, U, sp);
  } else if (S <= 5 && U <= 5 && in_catalog(S, U)) {
    routes = {[=] { return from_catalog(S, U); }};
  } else if (is_polyhedral_pair(S, U)) {
    routes = {[=, &sp] { return pair_witness(S, U, sp); }};
  } else if (U > S) {
    routes = many_unstable(S, U, sp);
  } else {
    routes = many_stable(S, U, sp);
  }

  std::string failures;
  for (const Route& route : routes) {
    Chain c;
    try {
      c = route();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ClassNotAchieved && e.kind() != ErrorKind::ConditionViolated &&
          e.kind() != ErrorKind::BudgetExhausted)
        throw;
      failures += std::string(failures.empty() ? "" : "; ") + e.what();
      continue;
    }
    EquilibriumReport r = analyze(c.poly);
    if (r.degenerate || r.S != S || r.U != U) {
      failures += "; route ends in (" + std::to_string(r.S) + "," + std::to_string(r.U) + ")";
      continue;
    }
    if (exact_cell && r.complexity() != 2 * R_closed(S, U)) {
      failures += "; route " + describe(c) + " has complexity " + std::to_string(r.complexity());
      continue;
    }
    c.recipe.S = S;
    c.recipe.U = U;
    return {std::move(c.poly), std::move(c.recipe), describe(c)};
  }
  throw Error(ErrorKind::ClassNotAchieved,
              "class (" + std::to_string(S) + "," + std::to_string(U) + "): " + failures);
}

}  // namespace equilib
