#include <algorithm>
#include <sstream>

#include "equilib/geometry.hpp"

namespace equilib {

const char* to_string(Check c) {
  switch (c) {
    case Check::FaceSize: return "face-size";
    case Check::RepeatedIndex: return "repeated-index";
    case Check::IndexRange: return "index-range";
    case Check::NonPlanar: return "non-planar";
    case Check::CollinearVertex: return "collinear-vertex";
    case Check::Orientation: return "orientation";
    case Check::NotConvex: return "not-convex";
    case Check::VertexDegree: return "vertex-degree";
    case Check::CoincidentVertices: return "coincident-vertices";
    case Check::Manifold: return "manifold";
    case Check::Euler: return "euler";
    case Check::EmptyVolume: return "empty-volume";
  }
  return "unknown";
}

bool ValidationReport::has(Check c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.check == c; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "valid f=" << f << " v=" << v << " e=" << e;
    return os.str();
  }
  for (size_t i = 0; i < violations.size(); ++i) {
    const auto& x = violations[i];
    if (i) os << "; ";
    os << to_string(x.check) << " [";
    for (size_t k = 0; k < x.indices.size(); ++k) os << (k ? "," : "") << x.indices[k];
    os << "] " << x.message;
  }
  return os.str();
}

ValidationReport validate(const Polyhedron& p) {
  ValidationReport r;
  r.f = p.f();
  r.v = p.v();
  auto add = [&](Check c, std::vector<int> idx, std::string msg) {
    r.violations.push_back({c, std::move(idx), std::move(msg)});
  };

  bool indices_ok = true;
  for (int fi = 0; fi < p.f(); ++fi) {
    const Cycle& c = p.faces[static_cast<size_t>(fi)];
    if (c.size() < 3) {
      add(Check::FaceSize, {fi}, "face has fewer than 3 vertices");
      indices_ok = false;
    }
    for (int i : c)
      if (i < 0 || i >= p.v()) {
        add(Check::IndexRange, {fi, i}, "vertex index out of range");
        indices_ok = false;
      }
    Cycle sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      add(Check::RepeatedIndex, {fi}, "face repeats a vertex");
      indices_ok = false;
    }
  }
  {
    std::vector<int> order(static_cast<size_t>(p.v()));
    for (int i = 0; i < p.v(); ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return p.vertices[static_cast<size_t>(a)] < p.vertices[static_cast<size_t>(b)];
    });
    for (size_t i = 1; i < order.size(); ++i)
      if (p.vertices[static_cast<size_t>(order[i])] == p.vertices[static_cast<size_t>(order[i - 1])])
        add(Check::CoincidentVertices, {order[i - 1], order[i]}, "vertices coincide");
  }
  if (!indices_ok) return r;

  Topology topo;
  bool manifold = true;
  try {
    topo = topology(p);
    r.e = topo.e();
  } catch (const Error& e) {
    add(Check::Manifold, {}, e.what());
    manifold = false;
  }

  for (int fi = 0; fi < p.f(); ++fi) {
    const Cycle& c = p.faces[static_cast<size_t>(fi)];
    auto pl = face_plane(p, fi);
    if (norm2(pl.n) == 0) {
      add(Check::NonPlanar, {fi}, "face has zero area");
      continue;
    }
    bool planar = true;
    for (int i : c)
      if (dot(pl.n, p.vertices[static_cast<size_t>(i)]) != pl.d) {
        add(Check::NonPlanar, {fi, i}, "vertex off the face plane");
        planar = false;
      }
    if (!planar) continue;
    for (size_t k = 0; k < c.size(); ++k) {
      const Vec3& a = p.vertices[static_cast<size_t>(c[k])];
      const Vec3& b = p.vertices[static_cast<size_t>(c[(k + 1) % c.size()])];
      const Vec3& d = p.vertices[static_cast<size_t>(c[(k + 2) % c.size()])];
      int s = sgn(dot(cross(b - a, d - b), pl.n));
      if (s == 0)
        add(Check::CollinearVertex, {fi, c[(k + 1) % c.size()]}, "vertex inside a face edge");
      else if (s < 0)
        add(Check::NotConvex, {fi, c[(k + 1) % c.size()]}, "reflex corner");
    }
    int above = 0, below = 0;
    for (int vi = 0; vi < p.v(); ++vi) {
      if (std::find(c.begin(), c.end(), vi) != c.end()) continue;
      int s = sgn(dot(pl.n, p.vertices[static_cast<size_t>(vi)]) - pl.d);
      if (s > 0) ++above;
      if (s < 0) ++below;
      if (s == 0) add(Check::NotConvex, {fi, vi}, "vertex on a face plane outside the face");
    }
    if (above > 0 && below == 0)
      add(Check::Orientation, {fi}, "face cycle is clockwise from outside");
    else if (above > 0)
      add(Check::NotConvex, {fi}, "vertices on both sides of the face plane");
  }

  if (manifold) {
    for (int vi = 0; vi < p.v(); ++vi)
      if (topo.vertex_faces[static_cast<size_t>(vi)].size() < 3)
        add(Check::VertexDegree, {vi}, "vertex lies in fewer than 3 faces");
    if (p.f() + p.v() - topo.e() != 2)
      add(Check::Euler, {p.f(), p.v(), topo.e()}, "f + v - e != 2");
  }
  if (r.ok() && mass_properties_unchecked(p).volume <= 0)
    add(Check::EmptyVolume, {}, "non-positive volume");
  return r;
}

void require_valid(const Polyhedron& p) {
  auto r = validate(p);
  if (!r.ok()) throw Error(ErrorKind::ValidationError, r.summary());
}

}  // namespace equilib
