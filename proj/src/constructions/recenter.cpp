#include <array>
#include <cmath>

#include "equilib/constructions.hpp"
#include "equilib/geometry.hpp"

namespace equilib {

namespace {

using Mat3 = std::array<Vec3d, 3>;  // columns

bool solve3(const Mat3& a, const Vec3d& b, Vec3d& x) {
  double det = dot(a[0], cross(a[1], a[2]));
  if (!std::isfinite(det) || std::abs(det) < 1e-300) return false;
  x = {dot(b, cross(a[1], a[2])) / det, dot(a[0], cross(b, a[2])) / det, dot(a[0], cross(a[1], b)) / det};
  return true;
}

}  // namespace

PolyhedronD recenter_vertex(const PolyhedronD& p, int q, const Vec3d& o, int* iterations) {
  if (q < 0 || q >= p.v()) throw Error(ErrorKind::BadSite, "vertex index out of range");
  Topology t = topology(p);
  const auto& star = t.vertex_faces[static_cast<size_t>(q)];
  if (star.size() != 3) throw Error(ErrorKind::BadSite, "recentering needs a degree-3 vertex");
  for (int f : star)
    if (p.faces[static_cast<size_t>(f)].size() != 3)
      throw Error(ErrorKind::BadSite, "recentering needs triangular faces at the vertex");

  const double diam = diameter(p);
  const double tol = 1e-12 * diam;
  PolyhedronD cur = p;
  auto residual = [&](const Vec3d& x) {
    PolyhedronD tmp = cur;
    tmp.vertices[static_cast<size_t>(q)] = x;
    return centroid(tmp) - o;
  };

  Vec3d x = cur.vertices[static_cast<size_t>(q)];
  Vec3d r = residual(x);
  for (int it = 0; it < 100; ++it) {
    if (norm(r) <= tol) {
      if (iterations) *iterations = it;
      cur.vertices[static_cast<size_t>(q)] = x;
      return cur;
    }
    Mat3 jac;
    double h = 1e-6 * diam;
    for (int k = 0; k < 3; ++k) {
      Vec3d e{0, 0, 0};
      (k == 0 ? e.x : k == 1 ? e.y : e.z) = h;
      jac[static_cast<size_t>(k)] = (residual(x + e) - residual(x - e)) / (2 * h);
    }
    Vec3d dx;
    if (!solve3(jac, r * -1.0, dx)) break;
    // damped step: halve until the residual decreases
    double lambda = 1;
    bool improved = false;
    for (int k = 0; k < 30; ++k) {
      Vec3d y = x + dx * lambda;
      Vec3d ry = residual(y);
      if (norm(ry) < norm(r)) {
        x = y;
        r = ry;
        improved = true;
        break;
      }
      lambda /= 2;
    }
    if (!improved) break;
  }
  throw Error(ErrorKind::NoConvergence,
              "centroid still " + std::to_string(norm(r)) + " from the target after recentering");
}

}  // namespace equilib
