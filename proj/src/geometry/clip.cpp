#include "equilib/geometry.hpp"

namespace equilib {

Polyhedron clip(const Polyhedron& p, const Vec3& n, const Scalar& d) {
  std::vector<Scalar> side(p.vertices.size());
  std::vector<Vec3> pts;
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    side[i] = dot(n, p.vertices[i]) - d;
    if (side[i] <= 0) pts.push_back(p.vertices[i]);
  }
  for (const Edge& e : topology(p).edges) {
    const Scalar& sa = side[static_cast<size_t>(e.a)];
    const Scalar& sb = side[static_cast<size_t>(e.b)];
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      Scalar t = sa / (sa - sb);
      const Vec3& a = p.vertices[static_cast<size_t>(e.a)];
      const Vec3& b = p.vertices[static_cast<size_t>(e.b)];
      pts.push_back(a + (b - a) * t);
    }
  }
  return hull_from_points(pts);
}

Vec3 project_to_face_plane(const Polyhedron& p, int f, const Vec3& x) {
  auto pl = face_plane(p, f);
  return x - pl.n * Scalar((dot(pl.n, x) - pl.d) / norm2(pl.n));
}

Scalar line_parameter(const Vec3& a, const Vec3& b, const Vec3& x) {
  return dot(x - a, b - a) / norm2(b - a);
}

}  // namespace equilib
