#include "equilib/geometry.hpp"

namespace equilib {

namespace {

template <class T>
std::pair<T, BasicVec3<T>> fan(const BasicPolyhedron<T>& p, int apex) {
  const auto& a = p.vertices[static_cast<size_t>(apex)];
  T vol(0);
  BasicVec3<T> moment(T(0), T(0), T(0));
  for (const Cycle& c : p.faces) {
    for (size_t i = 1; i + 1 < c.size(); ++i) {
      const auto& b = p.vertices[static_cast<size_t>(c[0])];
      const auto& d = p.vertices[static_cast<size_t>(c[i])];
      const auto& e = p.vertices[static_cast<size_t>(c[i + 1])];
      T t = orient(a, b, d, e);
      if (t == 0) continue;
      vol += t;
      moment += (a + b + d + e) * t;
    }
  }
  // vol holds 6V, moment holds 24 V c
  return {vol, moment};
}

}  // namespace

MassProperties mass_properties_unchecked(const Polyhedron& p, int apex) {
  auto [six_v, moment] = fan(p, apex);
  MassProperties m;
  m.volume = six_v / 6;
  m.centroid = moment / Scalar(six_v * 4);
  return m;
}

MassProperties mass_properties(const Polyhedron& p, int apex) {
  auto r = validate(p);
  if (!r.ok()) throw Error(ErrorKind::NotConvex, r.summary());
  return mass_properties_unchecked(p, apex);
}

BasicVec3<double> centroid(const PolyhedronD& p) {
  auto [six_v, moment] = fan(p, 0);
  return moment / (six_v * 4);
}

bool strictly_interior(const Polyhedron& p, const Vec3& o) {
  for (int fi = 0; fi < p.f(); ++fi) {
    auto pl = face_plane(p, fi);
    if (dot(pl.n, o) >= pl.d) return false;
  }
  return true;
}

}  // namespace equilib
