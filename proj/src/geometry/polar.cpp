#include <algorithm>

#include "equilib/geometry.hpp"

namespace equilib {

Polyhedron polar_dual(const Polyhedron& p, const Vec3& o) {
  if (!strictly_interior(p, o))
    throw Error(ErrorKind::ReferenceOutside, "polar centre is not strictly interior");
  Topology topo = topology(p);
  Polyhedron d;
  d.vertices.reserve(p.faces.size());
  for (int fi = 0; fi < p.f(); ++fi) {
    auto pl = face_plane(p, fi);
    Scalar h = pl.d - dot(pl.n, o);
    d.vertices.push_back(pl.n / h + o);
  }
  for (int vi = 0; vi < p.v(); ++vi) {
    Cycle c = topo.vertex_faces[static_cast<size_t>(vi)];
    d.faces.push_back(c);
    auto pl = face_plane(d, vi);
    if (sgn(dot(pl.n, p.vertices[static_cast<size_t>(vi)] - o)) < 0)
      std::reverse(d.faces.back().begin(), d.faces.back().end());
  }
  return d;
}

}  // namespace equilib
