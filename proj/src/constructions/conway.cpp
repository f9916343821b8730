#include <cmath>
#include <sstream>

#include "equilib/constructions.hpp"

namespace equilib {

namespace {

void check_window(const ConwayParams& cp) {
  if (cp.m < 2) throw Error(ErrorKind::ParamsOutOfWindow, "m must be >= 2");
  if (cp.r0 <= 0) throw Error(ErrorKind::ParamsOutOfWindow, "r0 must be positive");
  if (cp.a < 0 || cp.b < 0) throw Error(ErrorKind::ParamsOutOfWindow, "a and b must be >= 0");
}

using Point2 = std::pair<Scalar, Scalar>;

// Intersection of line p + s u with line q + t w.
Point2 meet(const Point2& p, const Point2& u, const Point2& q, const Point2& w) {
  Scalar den = u.first * w.second - u.second * w.first;
  Scalar s = ((q.first - p.first) * w.second - (q.second - p.second) * w.first) / den;
  return {p.first + s * u.first, p.second + s * u.second};
}

}  // namespace

std::vector<Point2> spiral_polygon(const ConwayParams& cp) {
  check_window(cp);
  const int m = cp.m;
  Scalar beta = pi_rational() / m;
  Scalar c = cos_rational(beta);
  Scalar tol = rational(1, 1000000000);
  std::vector<Point2> right;
  Scalar radius = cp.r0;
  for (int i = 1; i <= m; ++i) {
    radius /= c;
    Scalar ang = beta * i;
    Scalar x = radius * sin_rational(ang), y = -radius * cos_rational(ang);
    right.push_back({rationalize(x, Scalar(tol * cp.r0)), rationalize(y, Scalar(tol * cp.r0))});
  }
  right.back().first = 0;
  std::vector<Point2> poly = right;
  for (int i = m - 2; i >= 0; --i) poly.push_back({-right[static_cast<size_t>(i)].first, right[static_cast<size_t>(i)].second});
  if (cp.tilt != 0) {
    // re-cut the bottom edge along y = -r0 + tilt x
    size_t n = poly.size();
    Point2 base{0, -cp.r0}, dir{1, cp.tilt};
    Point2 a1 = poly[0], a2 = poly[1], b1 = poly[n - 1], b2 = poly[n - 2];
    poly[0] = meet(base, dir, a2, {a1.first - a2.first, a1.second - a2.second});
    poly[n - 1] = meet(base, dir, b2, {b1.first - b2.first, b1.second - b2.second});
  }
  return poly;
}

Polyhedron conway_prism(const ConwayParams& cp) {
  auto poly = spiral_polygon(cp);
  Scalar ymax = poly[0].second;
  for (const auto& p : poly) ymax = std::max(ymax, p.second);
  std::vector<Vec3> pts;
  for (const auto& [x, y] : poly) {
    Scalar half = (cp.a + cp.b * (ymax - y)) / 2;
    pts.push_back({x, y, half + cp.rho * x});
    pts.push_back({x, y, -half - cp.rho * x});
  }
  return hull_from_points(pts);
}

ConwayMeasures conway_measures(const Polyhedron& p, const ConwayParams& cp) {
  EquilibriumReport r = analyze(p);
  ConwayMeasures m;
  m.r0 = to_double(cp.r0);
  for (int f = 0; f < p.f(); ++f) {
    if (r.faces[static_cast<size_t>(f)] != Kind::Stable) continue;
    auto pl = face_plane(p, f);
    m.r = to_double(Scalar(pl.d - dot(pl.n, r.reference))) / std::sqrt(to_double(norm2(pl.n)));
    break;
  }
  return m;
}

namespace {

std::string extra_equilibria(const Polyhedron& p, const EquilibriumReport& r) {
  std::ostringstream os;
  os << "class (" << r.S << "," << r.U << "), stable faces:";
  for (int f = 0; f < p.f(); ++f)
    if (r.faces[static_cast<size_t>(f)] == Kind::Stable) os << " " << f;
  if (r.degenerate) os << ", degenerate sites present";
  return os.str();
}

}  // namespace

Polyhedron conway_solid(const ConwayParams& cp) {
  check_window(cp);
  if (cp.m < 9) throw Error(ErrorKind::ParamsOutOfWindow, "the spiral needs m >= 9");
  Polyhedron p = conway_prism(cp);
  EquilibriumReport r = analyze(p);
  if (r.degenerate || r.S != 1) throw Error(ErrorKind::NotMonostatic, extra_equilibria(p, r));
  ConwayMeasures m = conway_measures(p, cp);
  if (!(m.r < m.r0))
    throw Error(ErrorKind::NotMonostatic, "centroid height " + std::to_string(m.r) + " >= r0");
  return p;
}

double conway_limit_height(int m, bool wedge) {
  ConwayParams cp;
  cp.m = m;
  auto poly = spiral_polygon(cp);
  Scalar ymax = poly[0].second;
  for (const auto& p : poly) ymax = std::max(ymax, p.second);
  auto weight = [&](const Scalar& y) { return wedge ? Scalar(ymax - y) : Scalar(1); };
  // midpoint rule over a triangle fan is exact for the quadratic integrands
  Scalar mass = 0, moment = 0;
  for (size_t i = 1; i + 1 < poly.size(); ++i) {
    const Point2 &a = poly[0], &b = poly[i], &c = poly[i + 1];
    Scalar area = ((b.first - a.first) * (c.second - a.second) - (c.first - a.first) * (b.second - a.second)) / 2;
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
      Scalar y = (u.second + v.second) / 2;
      mass += area / 3 * weight(y);
      moment += area / 3 * weight(y) * y;
    }
  }
  return to_double(Scalar(moment / mass + cp.r0));
}

Polyhedron mono_pyramid_exact(const ConwayParams& cp) {
  auto poly = spiral_polygon(cp);
  std::vector<Vec3> pts;
  for (const auto& [x, y] : poly) pts.push_back({x, y, 0});
  pts.push_back({cp.apex_x, cp.apex_y, cp.apex_h});
  return hull_from_points(pts);
}

Polyhedron mono_unstable_pyramid(const ConwayParams& cp, bool symmetric) {
  ConwayParams q = cp;
  if (!symmetric && q.apex_x == 0) q.apex_x = rational(1, 100);
  if (symmetric && q.apex_x != 0)
    throw Error(ErrorKind::ParamsOutOfWindow, "the symmetric pyramid needs apex x = 0");
  Polyhedron p = mono_pyramid_exact(q);
  EquilibriumReport r = analyze(p);
  int want = symmetric ? 3 : 2;
  if (r.degenerate || r.U != 1 || r.S != want)
    throw Error(ErrorKind::ClassNotAchieved,
                "spiral pyramid: want (" + std::to_string(want) + ",1), " + extra_equilibria(p, r));
  return p;
}

}  // namespace equilib
