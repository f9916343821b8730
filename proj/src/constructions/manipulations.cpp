#include <algorithm>
#include <cmath>
#include <sstream>

#include "equilib/constructions.hpp"
#include "internal.hpp"

namespace equilib {

namespace detail {

Vec3 snap_unit(const Vec3d& v) {
  double n = norm(v);
  if (!(n > 0)) throw Error(ErrorKind::DegenerateInput, "zero direction");
  return {snap(v.x / n), snap(v.y / n), snap(v.z / n)};
}

Vec3 snap_unit(const Vec3& v) { return snap_unit(to_double(v)); }

Vec3d exact_centroid(const Polyhedron& p) { return to_double(mass_properties_unchecked(p).centroid); }

Vec3 interior_point(const Polyhedron& p) {
  Vec3 s(0, 0, 0);
  for (const Vec3& x : p.vertices) s += x;
  return s * Scalar(Scalar(1) / p.v());
}

int degree(const Topology& t, int v) { return static_cast<int>(t.vertex_neighbors[static_cast<size_t>(v)].size()); }

Vec3d project(const Vec3d& x, const Vec3d& n, const Vec3d& a) {
  double k = dot(x - a, n) / dot(n, n);
  return x - n * k;
}

double line_param(const Vec3d& a, const Vec3d& b, const Vec3d& x) {
  Vec3d e = b - a;
  return dot(x - a, e) / dot(e, e);
}

}  // namespace detail

using namespace detail;

namespace {

std::string cls(int S, int U) { return "(" + std::to_string(S) + "," + std::to_string(U) + ")"; }

Scalar diameter_epsilon(const Polyhedron& p, const SearchParams& sp) {
  if (sp.epsilon0) return *sp.epsilon0;
  return snap(diameter(p) / 16);
}

Built finish(const std::string& name, std::vector<int> site, const Tuned& t) {
  Built b;
  b.poly = t.poly;
  b.step.name = name;
  b.step.site = std::move(site);
  b.step.params.push_back(t.epsilon);
  for (const Scalar& x : t.x) b.step.params.push_back(x);
  b.trials = t.trials;
  return b;
}

int face_of_directed(const Polyhedron& p, int a, int b) {
  for (int f = 0; f < p.f(); ++f) {
    const Cycle& c = p.faces[static_cast<size_t>(f)];
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] == a && c[(i + 1) % c.size()] == b) return f;
  }
  return -1;
}

Vec3 face_normal(const Polyhedron& p, int f) { return face_plane(p, f).n; }

Kind edge_kind(const EquilibriumReport& r, const Topology& t, int a, int b) {
  int e = t.find_edge(a, b);
  return e < 0 ? Kind::None : r.edge_status[static_cast<size_t>(e)];
}

double edge_margin(const EquilibriumReport& r, const Topology& t, int a, int b) {
  int e = t.find_edge(a, b);
  return e < 0 ? 0.0 : r.edge_margin[static_cast<size_t>(e)];
}

}  // namespace

// ------------------------------------------------------------------ truncate_vertex

Polyhedron apply_truncate_vertex(const Polyhedron& p, int q, const Scalar& eps) {
  const Vec3& v = p.vertices[static_cast<size_t>(q)];
  Vec3 d = snap_unit(exact_centroid(p) - to_double(v));
  return clip(p, -d, -(dot(d, v) + eps));
}

Built truncate_vertex(const Polyhedron& p, int q, const SearchParams& sp) {
  if (q < 0 || q >= p.v()) throw Error(ErrorKind::BadSite, "vertex index out of range");
  Topology t = topology(p);
  if (degree(t, q) != 3)
    throw Error(ErrorKind::BadSite, "vertex " + std::to_string(q) + " has degree " +
                                        std::to_string(degree(t, q)) + ", need 3");
  EquilibriumReport r = analyze(p);
  if (r.degenerate) throw Error(ErrorKind::ConditionViolated, "input has degenerate equilibria");
  if (r.vertices[static_cast<size_t>(q)] != Kind::Unstable)
    throw Error(ErrorKind::BadSite, "vertex " + std::to_string(q) + " is not unstable");
  StepDescriptor step;
  step.name = "truncate_vertex";
  step.epsilon0 = diameter_epsilon(p, sp);
  step.centroid0 = to_double(r.reference);
  step.build = [&](const Scalar& eps, const std::vector<Scalar>&) { return apply_truncate_vertex(p, q, eps); };
  try {
    Tuned tuned = tune(step, class_check(r.S + 1, r.U + 2, p.f() + 1, p.v() + 2), sp);
    return finish(step.name, {q}, tuned);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExhausted) throw;
    throw Error(ErrorKind::ClassNotAchieved, std::string("truncate_vertex to ") +
                                                 cls(r.S + 1, r.U + 2) + ": " + e.what());
  }
}

// ------------------------------------------------------------------ erect_tetrahedron

namespace {

struct FaceFrame {
  Vec3 origin, n, u1, u2;
};

FaceFrame face_frame(const Polyhedron& p, int F) {
  const Cycle& c = p.faces[static_cast<size_t>(F)];
  Vec3d nd = to_double(face_normal(p, F));
  Vec3d a = to_double(p.vertices[static_cast<size_t>(c[0])]);
  Vec3d b = to_double(p.vertices[static_cast<size_t>(c[1])]);
  FaceFrame fr;
  fr.n = snap_unit(nd);
  fr.u1 = snap_unit(b - a);
  fr.u2 = snap_unit(cross(nd, b - a));
  Vec3d cf = project(exact_centroid(p), nd, a);
  fr.origin = {snap(cf.x), snap(cf.y), snap(cf.z)};
  return fr;
}

}  // namespace

Polyhedron apply_erect_tetrahedron(const Polyhedron& p, int F, const Scalar& eps, const Scalar& a1,
                                   const Scalar& a2) {
  FaceFrame fr = face_frame(p, F);
  Vec3 q = fr.origin + fr.n * eps + fr.u1 * a1 + fr.u2 * a2;
  std::vector<Vec3> pts = p.vertices;
  pts.push_back(q);
  return hull_from_points(pts);
}

Built erect_tetrahedron(const Polyhedron& p, int F, const SearchParams& sp) {
  if (F < 0 || F >= p.f()) throw Error(ErrorKind::BadSite, "face index out of range");
  if (p.faces[static_cast<size_t>(F)].size() != 3)
    throw Error(ErrorKind::BadSite, "face " + std::to_string(F) + " is not a triangle");
  EquilibriumReport r = analyze(p);
  if (r.degenerate) throw Error(ErrorKind::ConditionViolated, "input has degenerate equilibria");
  if (r.faces[static_cast<size_t>(F)] != Kind::Stable)
    throw Error(ErrorKind::BadSite, "face " + std::to_string(F) + " carries no stable point");
  FaceFrame fr = face_frame(p, F);
  Vec3d o = to_double(fr.origin), u1 = to_double(fr.u1), u2 = to_double(fr.u2);
  Vec3d nd = to_double(face_normal(p, F));
  StepDescriptor step;
  step.name = "erect_tetrahedron";
  step.epsilon0 = diameter_epsilon(p, sp);
  step.centroid0 = to_double(r.reference);
  step.dims = 2;
  step.guess = [=](const Scalar&, const Vec3d& c) {
    Vec3d cf = project(c, nd, o);
    return std::vector<double>{dot(cf - o, u1), dot(cf - o, u2)};
  };
  double d = diameter(p);
  step.half_width = {d / 64, d / 64};
  step.build = [&](const Scalar& eps, const std::vector<Scalar>& x) {
    return apply_erect_tetrahedron(p, F, eps, x[0], x[1]);
  };
  try {
    Tuned tuned = tune(step, class_check(r.S + 2, r.U + 1, p.f() + 2, p.v() + 1), sp);
    return finish(step.name, {F}, tuned);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExhausted) throw;
    throw Error(ErrorKind::ClassNotAchieved, std::string("erect_tetrahedron to ") +
                                                 cls(r.S + 2, r.U + 1) + ": " + e.what());
  }
}

// ------------------------------------------------------------------ face_truncate

namespace {

// Parameter of the intersection of line (a,b) with line (c,d) along (a,b), both
// lines in a common plane with normal n. Empty if parallel.
std::optional<Scalar> line_meet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& n) {
  Vec3 u = b - a, w = d - c;
  Scalar den = dot(cross(u, w), n);
  if (den == 0) return std::nullopt;
  return Scalar(dot(cross(c - a, w), n) / den);
}

}  // namespace

Polyhedron apply_face_truncate(const Polyhedron& p, const TruncationSite& site, const Scalar& tilt,
                               const Scalar& s, const Scalar& t) {
  const auto& ch = site.chain;
  size_t j = ch.size();
  const Vec3& q1 = p.vertices[static_cast<size_t>(ch[0])];
  const Vec3& q2 = p.vertices[static_cast<size_t>(ch[1])];
  const Vec3& qj1 = p.vertices[static_cast<size_t>(ch[j - 2])];
  const Vec3& qj = p.vertices[static_cast<size_t>(ch[j - 1])];
  Vec3 n = face_normal(p, site.face);
  n = n * snap(1 / std::sqrt(to_double(norm2(n))));
  Vec3 ya = q1 + (q2 - q1) * s;
  Vec3 yb = qj + (qj1 - qj) * t;
  Vec3d w = to_double(cross(n, yb - ya));
  if (dot(w, to_double(q2 - ya)) < 0) w = -w;
  Vec3 wn = snap_unit(w);
  // keep the tilted normal exactly orthogonal to the cut line
  Vec3 L = yb - ya;
  wn = wn - L * Scalar(dot(wn, L) / norm2(L));
  Vec3 g = n + wn * tilt;
  return clip(p, g, dot(g, ya));
}

std::vector<TruncationSite> truncation_sites(const Polyhedron& p, bool one_sided) {
  EquilibriumReport r = analyze(p);
  Topology t = topology(p);
  struct Ranked {
    size_t len;
    double margin;
    TruncationSite site;
  };
  std::vector<Ranked> out;
  for (int F = 0; F < p.f(); ++F) {
    const Cycle& c = p.faces[static_cast<size_t>(F)];
    size_t m = c.size();
    Vec3 n = face_normal(p, F);
    for (size_t i = 0; i < m; ++i) {
      for (int dir : {1, -1}) {
        auto at = [&](size_t k) {
          long idx = static_cast<long>(i) + dir * static_cast<long>(k);
          long mm = static_cast<long>(m);
          return c[static_cast<size_t>(((idx % mm) + mm) % mm)];
        };
        int q1 = at(0), q2 = at(1);
        bool start_ok = one_sided ? r.vertices[static_cast<size_t>(q1)] == Kind::Unstable
                                  : edge_kind(r, t, q1, q2) == Kind::Saddle;
        if (!start_ok) continue;
        double ma = one_sided ? r.vertex_margin[static_cast<size_t>(q1)] : edge_margin(r, t, q1, q2);
        // extend the chain through trivalent vertices until a saddle edge
        for (size_t jj = 3; jj <= m; ++jj) {
          int inner = at(jj - 2);
          if (degree(t, inner) != 3) break;
          int qa = at(jj - 2), qb = at(jj - 1);
          if (edge_kind(r, t, qa, qb) != Kind::Saddle) continue;
          const Vec3& A = p.vertices[static_cast<size_t>(q1)];
          const Vec3& B = p.vertices[static_cast<size_t>(q2)];
          auto meet = line_meet(A, B, p.vertices[static_cast<size_t>(qa)], p.vertices[static_cast<size_t>(qb)], n);
          if (!meet || *meet <= rational(1, 2)) continue;
          TruncationSite s;
          s.face = F;
          for (size_t k = 0; k < jj; ++k) s.chain.push_back(at(k));
          out.push_back({jj, std::min(ma, edge_margin(r, t, qa, qb)), s});
          break;
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.margin > b.margin;
  });
  std::vector<TruncationSite> sites;
  for (auto& x : out) sites.push_back(std::move(x.site));
  return sites;
}

namespace {

void check_truncation_site(const Polyhedron& p, const EquilibriumReport& r, const Topology& t,
                           const TruncationSite& site, bool one_sided) {
  const auto& ch = site.chain;
  if (site.face < 0 || site.face >= p.f()) throw Error(ErrorKind::BadSite, "face index out of range");
  if (ch.size() < 3) throw Error(ErrorKind::BadSite, "chain needs at least 3 vertices");
  const Cycle& c = p.faces[static_cast<size_t>(site.face)];
  size_t m = c.size();
  for (size_t k = 0; k + 1 < ch.size(); ++k) {
    auto it = std::find(c.begin(), c.end(), ch[k]);
    if (it == c.end()) throw Error(ErrorKind::BadSite, "chain vertex not on the face");
    size_t pos = static_cast<size_t>(it - c.begin());
    if (c[(pos + 1) % m] != ch[k + 1] && c[(pos + m - 1) % m] != ch[k + 1])
      throw Error(ErrorKind::BadSite, "chain does not follow the face boundary");
  }
  size_t j = ch.size();
  auto meet = line_meet(p.vertices[static_cast<size_t>(ch[0])], p.vertices[static_cast<size_t>(ch[1])],
                        p.vertices[static_cast<size_t>(ch[j - 2])], p.vertices[static_cast<size_t>(ch[j - 1])],
                        face_normal(p, site.face));
  if (!meet || *meet <= rational(1, 2))
    throw Error(ErrorKind::ConditionViolated, "(i): the lines of the two edges do not meet beyond q2");
  if (one_sided) {
    if (r.vertices[static_cast<size_t>(ch[0])] != Kind::Unstable)
      throw Error(ErrorKind::ConditionViolated, "(ii): q1 is not an unstable vertex");
  } else if (edge_kind(r, t, ch[0], ch[1]) != Kind::Saddle) {
    throw Error(ErrorKind::ConditionViolated, "(ii): [q1,q2] carries no saddle");
  }
  if (edge_kind(r, t, ch[j - 2], ch[j - 1]) != Kind::Saddle)
    throw Error(ErrorKind::ConditionViolated, "(ii): [q(j-1),q(j)] carries no saddle");
  for (size_t k = 1; k + 1 < j; ++k)
    if (degree(t, ch[k]) != 3)
      throw Error(ErrorKind::ConditionViolated,
                  "(iii): vertex " + std::to_string(ch[k]) + " is not trivalent");
}

}  // namespace

Built face_truncate(const Polyhedron& p, const TruncationSite& site, const SearchParams& sp, bool one_sided) {
  EquilibriumReport r = analyze(p);
  if (r.degenerate) throw Error(ErrorKind::ConditionViolated, "input has degenerate equilibria");
  Topology t = topology(p);
  check_truncation_site(p, r, t, site, one_sided);
  const auto& ch = site.chain;
  size_t j = ch.size();
  Vec3d q1 = to_double(p.vertices[static_cast<size_t>(ch[0])]);
  Vec3d q2 = to_double(p.vertices[static_cast<size_t>(ch[1])]);
  Vec3d qj1 = to_double(p.vertices[static_cast<size_t>(ch[j - 2])]);
  Vec3d qj = to_double(p.vertices[static_cast<size_t>(ch[j - 1])]);

  StepDescriptor step;
  step.name = one_sided ? "face_truncate_one_sided" : "face_truncate";
  step.epsilon0 = sp.epsilon0 ? *sp.epsilon0 : rational(1, 16);
  step.centroid0 = to_double(r.reference);
  step.dims = one_sided ? 1 : 2;
  step.guess = [=](const Scalar& tilt, const Vec3d& c) {
    // just past the feet; the window closes roughly like tilt / 30
    double delta = to_double(tilt) / 64;
    double tb = line_param(qj, qj1, c) + delta;
    if (one_sided) return std::vector<double>{tb};
    return std::vector<double>{line_param(q1, q2, c) + delta, tb};
  };
  step.half_width = one_sided ? std::vector<double>{1.0 / 512} : std::vector<double>{1.0 / 512, 1.0 / 512};
  step.build = [&](const Scalar& tilt, const std::vector<Scalar>& x) {
    if (one_sided) return apply_face_truncate(p, site, tilt, 0, x[0]);
    return apply_face_truncate(p, site, tilt, x[0], x[1]);
  };
  int du = one_sided ? 1 : 2;
  std::vector<int> s = {site.face};
  s.insert(s.end(), ch.begin(), ch.end());
  try {
    Tuned tuned = tune(step, class_check(r.S, r.U + du, p.f() + 1, p.v() + du), sp);
    return finish(step.name, s, tuned);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExhausted) throw;
    throw Error(ErrorKind::ClassNotAchieved,
                step.name + " to " + cls(r.S, r.U + du) + ": " + e.what());
  }
}

// ------------------------------------------------------------------ vertex_build

namespace {

struct BuildFrame {
  Vec3 win, g;  // inward in F across E, and F_E continued beyond E
};

BuildFrame build_frame(const Polyhedron& p, const BuildSite& s) {
  const Vec3& a = p.vertices[static_cast<size_t>(s.qa)];
  const Vec3& b = p.vertices[static_cast<size_t>(s.qb)];
  const Vec3& q1 = p.vertices[static_cast<size_t>(s.q1)];
  Vec3 e = b - a;
  Vec3 nF = face_normal(p, s.face);
  Vec3d win = to_double(cross(nF, e));
  if (dot(win, to_double(q1 - a)) < 0) win = -win;
  int FE = face_of_directed(p, s.qb, s.qa);
  if (FE < 0) throw Error(ErrorKind::BadSite, "edge has no opposite face");
  Vec3d mE = to_double(cross(face_normal(p, FE), e));
  const Cycle& c = p.faces[static_cast<size_t>(FE)];
  int other = -1;
  for (int k : c)
    if (k != s.qa && k != s.qb) other = k;
  if (dot(mE, to_double(p.vertices[static_cast<size_t>(other)] - a)) < 0) mE = -mE;
  return {snap_unit(win), snap_unit(-mE)};
}

Vec3 cF_exact(const Polyhedron& p, int F, const Vec3& c) { return project_to_face_plane(p, F, c); }

// Strictly inside triangle (a,b,c) in the plane with normal n.
bool inside_triangle(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& n) {
  int s1 = sgn(dot(cross(b - a, x - a), n)), s2 = sgn(dot(cross(c - b, x - b), n)),
      s3 = sgn(dot(cross(a - c, x - c), n));
  return (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
}

double distance_to_line(const Vec3d& x, const Vec3d& a, const Vec3d& b) {
  Vec3d e = b - a;
  return norm(cross(x - a, e)) / norm(e);
}

void check_build_site(const Polyhedron& p, const EquilibriumReport& r, const Topology& t, const BuildSite& s) {
  if (s.face < 0 || s.face >= p.f()) throw Error(ErrorKind::BadSite, "face index out of range");
  const Cycle& c = p.faces[static_cast<size_t>(s.face)];
  size_t m = c.size();
  auto it = std::find(c.begin(), c.end(), s.qa);
  if (it == c.end() || c[(static_cast<size_t>(it - c.begin()) + 1) % m] != s.qb)
    throw Error(ErrorKind::BadSite, "qa -> qb is not a directed edge of the face");
  if (std::find(c.begin(), c.end(), s.q1) == c.end() || s.q1 == s.qa || s.q1 == s.qb)
    throw Error(ErrorKind::BadSite, "q1 must be another vertex of the face");
  const Vec3& A = p.vertices[static_cast<size_t>(s.q1)];
  const Vec3& B = p.vertices[static_cast<size_t>(s.qa)];
  const Vec3& C = p.vertices[static_cast<size_t>(s.qb)];
  Vec3 n = face_normal(p, s.face);
  Vec3 cf = cF_exact(p, s.face, r.reference);
  if (r.faces[static_cast<size_t>(s.face)] != Kind::Stable || !inside_triangle(cf, A, B, C, n))
    throw Error(ErrorKind::ConditionViolated, "(i): the stable point of F is not inside (q1, q(j-1), q(j))");
  if (edge_kind(r, t, s.qa, s.qb) != Kind::Saddle)
    throw Error(ErrorKind::ConditionViolated, "(ii): [q(j-1), q(j)] carries no saddle");
  for (int k : c)
    if (k != s.q1 && k != s.qa && k != s.qb && degree(t, k) != 3)
      throw Error(ErrorKind::ConditionViolated, "(iii): vertex " + std::to_string(k) + " is not trivalent");
  Vec3 cE = B + (C - B) * line_parameter(B, C, r.reference);
  if (norm2(cross(cf - A, cE - A)) == 0)
    throw Error(ErrorKind::ConditionViolated, "(iv): q1, c_F and c_E are collinear");
}

}  // namespace

Polyhedron apply_vertex_build(const Polyhedron& p, const BuildSite& s, const Scalar& h, const Scalar& sigma,
                              const Scalar& tau) {
  BuildFrame fr = build_frame(p, s);
  const Vec3& q1 = p.vertices[static_cast<size_t>(s.q1)];
  const Vec3& a = p.vertices[static_cast<size_t>(s.qa)];
  const Vec3& b = p.vertices[static_cast<size_t>(s.qb)];
  Vec3 x = a + (b - a) * sigma;
  Vec3 q = x + (fr.win * Scalar(1 - tau) + fr.g * tau) * h;
  Vec3 inside = interior_point(p);
  auto cut = [&](const Polyhedron& poly, const Vec3& u, const Vec3& v, const Vec3& w) {
    Vec3 n = cross(v - u, w - u);
    Scalar d = dot(n, u);
    if (dot(n, inside) > d) {
      n = -n;
      d = -d;
    }
    return clip(poly, n, d);
  };
  Polyhedron r = cut(p, q1, a, q);
  r = cut(r, b, q1, q);
  std::vector<Vec3> pts = r.vertices;
  pts.push_back(q);
  return hull_from_points(pts);
}

std::vector<BuildSite> build_sites(const Polyhedron& p) {
  EquilibriumReport r = analyze(p);
  Topology t = topology(p);
  std::vector<std::pair<double, BuildSite>> out;
  for (int F = 0; F < p.f(); ++F) {
    if (r.faces[static_cast<size_t>(F)] != Kind::Stable) continue;
    const Cycle& cyc = p.faces[static_cast<size_t>(F)];
    size_t m = cyc.size();
    for (size_t i = 0; i < m; ++i) {
      BuildSite s;
      s.face = F;
      s.qa = cyc[i];
      s.qb = cyc[(i + 1) % m];
      if (edge_kind(r, t, s.qa, s.qb) != Kind::Saddle) continue;
      for (size_t k = 0; k < m; ++k) {
        s.q1 = cyc[k];
        if (s.q1 == s.qa || s.q1 == s.qb) continue;
        try {
          check_build_site(p, r, t, s);
        } catch (const Error&) {
          continue;
        }
        Vec3d cf = to_double(cF_exact(p, F, r.reference));
        Vec3d A = to_double(p.vertices[static_cast<size_t>(s.q1)]);
        Vec3d B = to_double(p.vertices[static_cast<size_t>(s.qa)]);
        Vec3d C = to_double(p.vertices[static_cast<size_t>(s.qb)]);
        double room = std::min({distance_to_line(cf, A, B), distance_to_line(cf, B, C), distance_to_line(cf, C, A)});
        out.push_back({room, s});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<BuildSite> sites;
  for (auto& x : out) sites.push_back(x.second);
  return sites;
}

Built vertex_build(const Polyhedron& p, const BuildSite& site, const SearchParams& sp, bool one_sided) {
  EquilibriumReport r = analyze(p);
  if (r.degenerate) throw Error(ErrorKind::ConditionViolated, "input has degenerate equilibria");
  Topology t = topology(p);
  check_build_site(p, r, t, site);
  BuildFrame fr = build_frame(p, site);
  Vec3d q1 = to_double(p.vertices[static_cast<size_t>(site.q1)]);
  Vec3d a = to_double(p.vertices[static_cast<size_t>(site.qa)]);
  Vec3d b = to_double(p.vertices[static_cast<size_t>(site.qb)]);
  Vec3d nF = to_double(face_normal(p, site.face));
  Vec3d win = to_double(fr.win), g = to_double(fr.g);
  Vec3d e = b - a;
  Vec3d eh = e * (1 / norm(e));

  auto make = [&](double offset) {
    StepDescriptor step;
    step.name = one_sided ? "vertex_build_one_sided" : "vertex_build";
    step.epsilon0 = diameter_epsilon(p, sp);
    step.centroid0 = to_double(r.reference);
    step.dims = 2;
    step.guess = [=](const Scalar& hs, const Vec3d& c) {
      double h = to_double(hs);
      Vec3d cf = project(c, nF, q1);
      // where the ray from q1 through c_F crosses the line of E
      Vec3d d = cf - q1;
      Vec3d nn = cross(d, nF);
      double sigma = dot(q1 - a, nn) / dot(e, nn) + offset;
      Vec3d x = a + e * sigma;
      Vec3d rr = c - x;
      rr = rr - eh * dot(rr, eh);
      auto fn = [&](double tau) {
        Vec3d k = win * (1 - tau) + g * tau;
        return dot(rr, k) / norm(k) - h * norm(k) / 3;
      };
      double lo = 1e-9, hi = 1 - 1e-9, tau = 0.5;
      if ((fn(lo) > 0) != (fn(hi) > 0)) {
        for (int it = 0; it < 80; ++it) {
          double mid = (lo + hi) / 2;
          if ((fn(lo) > 0) == (fn(mid) > 0))
            lo = mid;
          else
            hi = mid;
        }
        tau = (lo + hi) / 2;
      }
      return std::vector<double>{sigma, tau};
    };
    step.half_width = {1.0 / 64, 1.0 / 64};
    step.build = [&](const Scalar& h, const std::vector<Scalar>& x) {
      return apply_vertex_build(p, site, h, x[0], x[1]);
    };
    return step;
  };
  int ds = one_sided ? 1 : 2;
  auto check = class_check(r.S + ds, r.U, p.f() + 2, p.v() + 1);
  std::vector<int> s = {site.face, site.q1, site.qa, site.qb};
  std::string last;
  for (double offset : one_sided ? std::vector<double>{1.0 / 64, -1.0 / 64} : std::vector<double>{0.0}) {
    StepDescriptor step = make(offset);
    try {
      return finish(step.name, s, tune(step, check, sp));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExhausted) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::ClassNotAchieved, std::string(one_sided ? "vertex_build_one_sided" : "vertex_build") +
                                               " to " + cls(r.S + ds, r.U) + ": " + last);
}

// ------------------------------------------------------------------ replay dispatch

Polyhedron apply_step(const Polyhedron& p, const RecipeStep& st) {
  auto need = [&](size_t sites, size_t params) {
    if (st.site.size() < sites || st.params.size() < params)
      throw Error(ErrorKind::ParseError, "step " + st.name + " has too few fields");
  };
  if (st.name == "truncate_vertex") {
    need(1, 1);
    return apply_truncate_vertex(p, st.site[0], st.params[0]);
  }
  if (st.name == "erect_tetrahedron") {
    need(1, 3);
    return apply_erect_tetrahedron(p, st.site[0], st.params[0], st.params[1], st.params[2]);
  }
  if (st.name == "face_truncate" || st.name == "face_truncate_one_sided") {
    TruncationSite s;
    need(4, st.name == "face_truncate" ? 3 : 2);
    s.face = st.site[0];
    s.chain.assign(st.site.begin() + 1, st.site.end());
    if (st.name == "face_truncate") return apply_face_truncate(p, s, st.params[0], st.params[1], st.params[2]);
    return apply_face_truncate(p, s, st.params[0], 0, st.params[1]);
  }
  if (st.name == "vertex_build" || st.name == "vertex_build_one_sided") {
    need(4, 3);
    BuildSite s{st.site[0], st.site[1], st.site[2], st.site[3]};
    return apply_vertex_build(p, s, st.params[0], st.params[1], st.params[2]);
  }
  throw Error(ErrorKind::ParseError, "unknown step " + st.name);
}

}  // namespace equilib
