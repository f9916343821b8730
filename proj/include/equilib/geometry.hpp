#pragma once

#include <string>
#include <vector>

#include "equilib/error.hpp"
#include "equilib/polyhedron.hpp"

namespace equilib {

/// Exact convex hull. Coplanar adjacent triangles are merged, points that are not
/// extreme are dropped and the output is canonical (see `canonical`).
/// Throws Error(DegenerateInput) for fewer than 4 affinely independent points.
Polyhedron hull_from_points(const std::vector<Vec3>& points);

enum class Check {
  FaceSize,
  RepeatedIndex,
  IndexRange,
  NonPlanar,
  CollinearVertex,
  Orientation,
  NotConvex,
  VertexDegree,
  CoincidentVertices,
  Manifold,
  Euler,
  EmptyVolume,
};

const char* to_string(Check c);

struct Violation {
  Check check;
  std::vector<int> indices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int f = 0, v = 0, e = 0;

  bool ok() const { return violations.empty(); }
  bool has(Check c) const;
  std::string summary() const;
};

ValidationReport validate(const Polyhedron& p);

/// Throws Error(ValidationError) with the report summary.
void require_valid(const Polyhedron& p);

struct MassProperties {
  Scalar volume;
  Vec3 centroid;
};

/// Exact volume and centroid by a fan of tetrahedra from vertex `apex`.
/// Throws Error(NotConvex) if validation fails.
MassProperties mass_properties(const Polyhedron& p, int apex = 0);
/// Same without validation, for callers that already validated.
MassProperties mass_properties_unchecked(const Polyhedron& p, int apex = 0);
BasicVec3<double> centroid(const PolyhedronD& p);

/// True iff o lies strictly inside every face half-space.
bool strictly_interior(const Polyhedron& p, const Vec3& o);

/// Polar dual with respect to o. Dual vertex i is the pole of face i of `p`
/// (translated back by o); dual face j is the cycle of poles around vertex j.
/// Throws Error(ReferenceOutside) unless o is strictly interior.
Polyhedron polar_dual(const Polyhedron& p, const Vec3& o);

/// P intersected with the half-space <n, x> <= d (hull of kept vertices and edge
/// crossings). Throws Error(DegenerateInput) if the remainder is flat or empty.
Polyhedron clip(const Polyhedron& p, const Vec3& n, const Scalar& d);

/// Orthogonal projection of x onto the plane of face f.
Vec3 project_to_face_plane(const Polyhedron& p, int f, const Vec3& x);

/// Orthogonal projection parameter of x on the line a + t (b - a).
Scalar line_parameter(const Vec3& a, const Vec3& b, const Vec3& x);

}  // namespace equilib
