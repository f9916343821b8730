#pragma once

#include "equilib/constructions.hpp"

namespace equilib {

namespace detail {

/// Unit vector with every component snapped to a short rational.
Vec3 snap_unit(const Vec3d& v);
Vec3 snap_unit(const Vec3& v);
Vec3d exact_centroid(const Polyhedron& p);
/// Vertex average; strictly interior for a valid polyhedron.
Vec3 interior_point(const Polyhedron& p);
int degree(const Topology& t, int v);
Vec3d project(const Vec3d& x, const Vec3d& n, const Vec3d& a);
double line_param(const Vec3d& a, const Vec3d& b, const Vec3d& x);

}  // namespace detail

/// First height in the retry schedule of `pyramid` that verifies.
Scalar pyramid_height(int S, const Scalar& h);

Polyhedron apply_truncate_vertex(const Polyhedron& p, int q, const Scalar& eps);
Polyhedron apply_erect_tetrahedron(const Polyhedron& p, int F, const Scalar& eps, const Scalar& a1,
                                   const Scalar& a2);
Polyhedron apply_face_truncate(const Polyhedron& p, const TruncationSite& site, const Scalar& tilt,
                               const Scalar& s, const Scalar& t);
Polyhedron apply_vertex_build(const Polyhedron& p, const BuildSite& s, const Scalar& h, const Scalar& sigma,
                              const Scalar& tau);

}  // namespace equilib
