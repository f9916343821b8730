#include "equilib/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace equilib {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Stable: return "stable";
    case Kind::Saddle: return "saddle";
    case Kind::Unstable: return "unstable";
    case Kind::None: return "none";
    case Kind::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(SiteType t) {
  switch (t) {
    case SiteType::Face: return "face";
    case SiteType::Edge: return "edge";
    case SiteType::Vertex: return "vertex";
  }
  return "?";
}

std::vector<Site> EquilibriumReport::degenerate_sites() const {
  std::vector<Site> out;
  for (int i = 0; i < f(); ++i)
    if (faces[static_cast<size_t>(i)] == Kind::Degenerate) out.push_back({SiteType::Face, i});
  for (int i = 0; i < e(); ++i)
    if (edge_status[static_cast<size_t>(i)] == Kind::Degenerate) out.push_back({SiteType::Edge, i});
  for (int i = 0; i < v(); ++i)
    if (vertices[static_cast<size_t>(i)] == Kind::Degenerate) out.push_back({SiteType::Vertex, i});
  return out;
}

namespace {

double as_double(const Scalar& x) { return x.get_d(); }
double as_double(double x) { return x; }

// Sign of a predicate value; `len` converts it to a length for the float backend.
struct ExactJudge {
  int sign(const Scalar& v, double) const { return sgn(v); }
};

struct FloatJudge {
  double eps;  // tau * diameter
  int sign(double v, double len) const {
    double m = len > 0 ? v / len : v;
    if (m > eps) return 1;
    if (m < -eps) return -1;
    return 0;
  }
};

double length(const Vec3& v) { return std::sqrt(norm2(v).get_d()); }
double length(const Vec3d& v) { return norm(v); }

// Combines the signs of a conjunction of strict inequalities.
struct Conjunction {
  bool any_negative = false, any_zero = false;
  double margin = std::numeric_limits<double>::infinity();
  void add(int s, double m) {
    if (s < 0) any_negative = true;
    if (s == 0) any_zero = true;
    margin = std::min(margin, s == 0 ? 0.0 : m);
  }
  Kind result(Kind yes) const {
    if (any_negative) return Kind::None;
    if (any_zero) return Kind::Degenerate;
    return yes;
  }
};

template <class T, class Judge>
struct Classifier {
  const BasicPolyhedron<T>& p;
  const std::vector<Plane<T>>& planes;
  const BasicVec3<T>& c;
  Judge judge;

  const BasicVec3<T>& V(int i) const { return p.vertices[static_cast<size_t>(i)]; }

  std::pair<Kind, double> face(int fi) const {
    const Cycle& cy = p.faces[static_cast<size_t>(fi)];
    const auto& n = planes[static_cast<size_t>(fi)].n;
    double nlen = length(n);
    Conjunction all;
    for (size_t i = 0; i < cy.size(); ++i) {
      const auto& u = V(cy[i]);
      const auto& w = V(cy[(i + 1) % cy.size()]);
      T val = dot(cross(w - u, c - u), n);
      double len = length(w - u) * nlen;
      all.add(judge.sign(val, len), as_double(val) / len);
    }
    return {all.result(Kind::Stable), all.margin};
  }

  std::pair<Kind, double> edge(const Edge& ed) const {
    const auto& a = V(ed.a);
    const auto& b = V(ed.b);
    BasicVec3<T> e = b - a, r = c - a;
    double elen = length(e);
    T t = dot(r, e);
    T rest = norm2(e) - t;
    BasicVec3<T> m1 = cross(planes[static_cast<size_t>(ed.left)].n, e);
    BasicVec3<T> m2 = cross(planes[static_cast<size_t>(ed.right)].n, BasicVec3<T>(-e));
    T s1 = dot(r, m1), s2 = dot(r, m2);
    double l1 = length(m1), l2 = length(m2);
    Conjunction all;
    all.add(judge.sign(t, elen), as_double(t) / elen);
    all.add(judge.sign(rest, elen), as_double(rest) / elen);
    all.add(judge.sign(s1, l1), as_double(s1) / l1);
    all.add(judge.sign(s2, l2), as_double(s2) / l2);
    return {all.result(Kind::Saddle), all.margin};
  }

  std::pair<Kind, double> vertex(int vi) const {
    const auto& q = V(vi);
    BasicVec3<T> out = q - c;
    double olen = length(out);
    Conjunction all;
    for (int k = 0; k < p.v(); ++k) {
      if (k == vi) continue;
      T val = -dot(V(k) - q, out);
      all.add(judge.sign(val, olen), as_double(val) / olen);
    }
    return {all.result(Kind::Unstable), all.margin};
  }
};

template <class T>
std::vector<Plane<T>> planes_of(const BasicPolyhedron<T>& p) {
  std::vector<Plane<T>> out;
  out.reserve(p.faces.size());
  for (int f = 0; f < p.f(); ++f) out.push_back(face_plane(p, f));
  return out;
}

void require_interior(const std::vector<Plane<Scalar>>& planes, const Vec3& c) {
  for (const auto& pl : planes)
    if (dot(pl.n, c) >= pl.d)
      throw Error(ErrorKind::ReferenceOutside, "reference point is not strictly interior");
}

}  // namespace

Kind classify_site(const Polyhedron& p, const Vec3& c, Site site) {
  auto planes = planes_of(p);
  require_interior(planes, c);
  Classifier<Scalar, ExactJudge> cl{p, planes, c, {}};
  switch (site.type) {
    case SiteType::Face:
      if (site.index < 0 || site.index >= p.f()) throw Error(ErrorKind::BadSite, "face index");
      return cl.face(site.index).first;
    case SiteType::Vertex:
      if (site.index < 0 || site.index >= p.v()) throw Error(ErrorKind::BadSite, "vertex index");
      return cl.vertex(site.index).first;
    case SiteType::Edge: {
      Topology topo = topology(p);
      if (site.index < 0 || site.index >= topo.e()) throw Error(ErrorKind::BadSite, "edge index");
      return cl.edge(topo.edges[static_cast<size_t>(site.index)]).first;
    }
  }
  return Kind::None;
}

EquilibriumReport analyze(const Polyhedron& p, const std::optional<Vec3>& ref) {
  Vec3 c = ref ? *ref : mass_properties(p).centroid;
  auto planes = planes_of(p);
  require_interior(planes, c);
  Topology topo = topology(p);
  Classifier<Scalar, ExactJudge> cl{p, planes, c, {}};
  EquilibriumReport r;
  r.reference = c;
  r.edges = topo.edges;
  for (int f = 0; f < p.f(); ++f) {
    auto [k, m] = cl.face(f);
    r.faces.push_back(k);
    r.face_margin.push_back(m);
  }
  for (const Edge& e : topo.edges) {
    auto [k, m] = cl.edge(e);
    r.edge_status.push_back(k);
    r.edge_margin.push_back(m);
  }
  for (int v = 0; v < p.v(); ++v) {
    auto [k, m] = cl.vertex(v);
    r.vertices.push_back(k);
    r.vertex_margin.push_back(m);
  }
  r.S = static_cast<int>(std::count(r.faces.begin(), r.faces.end(), Kind::Stable));
  r.H = static_cast<int>(std::count(r.edge_status.begin(), r.edge_status.end(), Kind::Saddle));
  r.U = static_cast<int>(std::count(r.vertices.begin(), r.vertices.end(), Kind::Unstable));
  r.degenerate = !r.degenerate_sites().empty();
  return r;
}

EquilibriumReport analyze_strict(const Polyhedron& p, const std::optional<Vec3>& c) {
  auto r = analyze(p, c);
  if (r.degenerate) {
    std::string sites;
    for (const auto& s : r.degenerate_sites())
      sites += std::string(sites.empty() ? "" : ", ") + to_string(s.type) + " " +
               std::to_string(s.index);
    throw Error(ErrorKind::DegenerateEquilibria, sites);
  }
  return r;
}

IdentityResiduals check_balance_identities(const EquilibriumReport& r) {
  IdentityResiduals out;
  out.poincare_hopf = r.S + r.U - r.H - 2;
  out.euler = r.f() + r.v() - r.e() - 2;
  out.complexity = r.complexity() - 2 * (r.f() + r.v() - r.S - r.U);
  return out;
}

ReportD analyze_float(const PolyhedronD& p, const Vec3d& c, double tau) {
  auto planes = planes_of(p);
  Topology topo = topology(p);
  Classifier<double, FloatJudge> cl{p, planes, c, {tau * diameter(p)}};
  ReportD r;
  r.edges = topo.edges;
  for (int f = 0; f < p.f(); ++f) r.faces.push_back(cl.face(f).first);
  for (const Edge& e : topo.edges) r.edge_status.push_back(cl.edge(e).first);
  for (int v = 0; v < p.v(); ++v) r.vertices.push_back(cl.vertex(v).first);
  r.S = static_cast<int>(std::count(r.faces.begin(), r.faces.end(), Kind::Stable));
  r.H = static_cast<int>(std::count(r.edge_status.begin(), r.edge_status.end(), Kind::Saddle));
  r.U = static_cast<int>(std::count(r.vertices.begin(), r.vertices.end(), Kind::Unstable));
  auto deg = [](const std::vector<Kind>& v) {
    return std::find(v.begin(), v.end(), Kind::Degenerate) != v.end();
  };
  r.degenerate = deg(r.faces) || deg(r.edge_status) || deg(r.vertices);
  return r;
}

MidscribedResult verify_midscribed_equilibria(const PolyhedronD& p, const Vec3d& o,
                                              double tangency_tol, double tau) {
  Topology topo = topology(p);
  MidscribedResult res;
  for (const Edge& e : topo.edges) {
    Vec3d a = p.vertices[static_cast<size_t>(e.a)], b = p.vertices[static_cast<size_t>(e.b)];
    double dist = norm(cross(b - a, o - a)) / norm(b - a);
    res.tangency_residual = std::max(res.tangency_residual, std::abs(dist - 1.0));
  }
  if (res.tangency_residual > tangency_tol)
    throw Error(ErrorKind::NotMidscribed,
                "worst edge-to-sphere residual " + std::to_string(res.tangency_residual));
  ReportD r = analyze_float(p, o, tau);
  res.sites = p.f() + p.v() + topo.e();
  res.equilibria = r.S + r.U + r.H;
  return res;
}

}  // namespace equilib
