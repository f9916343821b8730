#include <array>
#include <map>

#include "equilib/constructions.hpp"
#include "internal.hpp"

namespace equilib {

namespace {

// A = o, B = (1,0,0), C = (cx,cy,0), D = (dx,dy,dz).
struct Tetra {
  const char *cx, *cy, *dx, *dy, *dz;
};

// A = o, B = (0,1,0), C = (cx,cy,0), D = (dx,dy,0), E = (ex,ey,ez).
struct Penta {
  const char *cx, *cy, *dx, *dy, *ex, *ey, *ez;
};

const std::map<std::pair<int, int>, Tetra>& tetrahedra() {
  static const std::map<std::pair<int, int>, Tetra> t = {
      {{2, 2}, {"3.2", "1.9", "-2.2", "0.3", "1.8"}},
      {{2, 3}, {"1.9", "5.3", "1.9", "-0.9", "5.2"}},
      {{2, 4}, {"-0.9", "5.3", "1.9", "0.9", "5.2"}},
      {{3, 2}, {"1.0", "2.7", "-0.9", "-4.1", "3.4"}},
      {{3, 3}, {"1.0", "5.7", "0.5", "-0.5", "1.3"}},
      {{3, 4}, {"0.5", "2.8", "0.5", "-0.7", "1.2"}},
      {{4, 2}, {"3.2", "3.8", "-2.2", "-2.9", "2.5"}},
      {{4, 3}, {"1.9", "5.3", "1.9", "5.0", "1.8"}},
  };
  return t;
}

const std::map<std::pair<int, int>, Penta>& pentahedra() {
  static const std::map<std::pair<int, int>, Penta> t = {
      {{2, 5}, {"1.0", "1.7", "0.5", "-0.3", "2.1", "1.2", "1.2"}},
      {{3, 5}, {"1.0", "1.7", "3.8", "-2.2", "1.6", "0.9", "0.9"}},
      {{4, 5}, {"2.5", "1.4", "3.8", "-2.2", "2.0", "1.2", "1.2"}},
      {{5, 2}, {"1.0", "1.7", "0.9", "0.5", "-0.6", "-1.1", "-1.1"}},
      {{5, 3}, {"1.0", "1.7", "0.9", "0.5", "1.5", "2.6", "2.6"}},
      {{5, 4}, {"1.0", "1.7", "1.3", "0.8", "1.5", "2.6", "2.6"}},
  };
  return t;
}

Scalar q(const char* s) { return parse_scalar(s); }

}  // namespace

Polyhedron pyramid_exact(int S, const Scalar& h) {
  if (S < 4) throw Error(ErrorKind::BadSite, "pyramid needs S >= 4");
  if (h <= 0) throw Error(ErrorKind::ParamsOutOfWindow, "pyramid height must be positive");
  int n = S - 1;
  // circumradius 1 / cos(pi / n) gives unit inradius
  Scalar half = pi_rational() / n;
  Scalar R = 1 / cos_rational(half);
  Scalar tol = rational(1, 10000000);  // 1e-7 absolute on a unit-scale polygon
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k) {
    Scalar ang = 2 * pi_rational() * k / n;
    pts.push_back({rationalize(Scalar(R * cos_rational(ang)), tol),
                   rationalize(Scalar(R * sin_rational(ang)), tol), Scalar(0)});
  }
  pts.push_back({0, 0, h});
  return hull_from_points(pts);
}

Scalar pyramid_height(int S, const Scalar& h) {
  std::string last;
  // h, 2h, h/2, 4h, h/4, ...
  for (int attempt = 0; attempt < 16; ++attempt) {
    Scalar cand = h;
    for (int k = 0; k < (attempt + 1) / 2; ++k) cand = attempt % 2 ? Scalar(cand * 2) : Scalar(cand / 2);
    Polyhedron p = pyramid_exact(S, cand);
    if (p.f() == S && p.v() == S) {
      EquilibriumReport r = analyze(p);
      if (!r.degenerate && r.S == S && r.U == S && r.complexity() == 0) return cand;
      last = "(" + std::to_string(r.S) + "," + std::to_string(r.U) + ")";
    }
  }
  throw Error(ErrorKind::ClassNotAchieved,
              "pyramid(" + std::to_string(S) + "): achieved " + last);
}

Polyhedron pyramid(int S, const Scalar& h) { return pyramid_exact(S, pyramid_height(S, h)); }

bool in_catalog(int S, int U) {
  if (S == 4 && U == 4) return true;
  if (S == 5 && U == 5) return true;
  return tetrahedra().count({S, U}) || pentahedra().count({S, U});
}

Polyhedron catalog(int S, int U) {
  if (S == 4 && U == 4) return regular_tetrahedron();
  if (S == 5 && U == 5) return pyramid(5, 1);
  if (auto it = tetrahedra().find({S, U}); it != tetrahedra().end()) {
    const Tetra& t = it->second;
    return hull_from_points({{0, 0, 0}, {1, 0, 0}, {q(t.cx), q(t.cy), 0}, {q(t.dx), q(t.dy), q(t.dz)}});
  }
  if (auto it = pentahedra().find({S, U}); it != pentahedra().end()) {
    const Penta& t = it->second;
    return hull_from_points({{0, 0, 0},
                             {0, 1, 0},
                             {q(t.cx), q(t.cy), 0},
                             {q(t.dx), q(t.dy), 0},
                             {q(t.ex), q(t.ey), q(t.ez)}});
  }
  throw Error(ErrorKind::UnknownCatalogEntry,
              "no catalog solid for (" + std::to_string(S) + "," + std::to_string(U) + ")");
}

}  // namespace equilib
