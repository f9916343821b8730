#pragma once

#include <array>
#include <string>
#include <vector>

#include "equilib/vec3.hpp"

namespace equilib {

using Cycle = std::vector<int>;

/// Convex polyhedron: vertices plus face cycles, counterclockwise seen from outside.
template <class T>
struct BasicPolyhedron {
  std::vector<BasicVec3<T>> vertices;
  std::vector<Cycle> faces;

  int f() const { return static_cast<int>(faces.size()); }
  int v() const { return static_cast<int>(vertices.size()); }
};

using Polyhedron = BasicPolyhedron<Scalar>;
using PolyhedronD = BasicPolyhedron<double>;

/// Undirected edge {a < b}; `left` holds the directed edge a->b, `right` holds b->a.
struct Edge {
  int a = -1, b = -1;
  int left = -1, right = -1;
};

/// Derived incidence data.
struct Topology {
  std::vector<Edge> edges;
  /// Faces around each vertex, in counterclockwise order seen from outside.
  std::vector<std::vector<int>> vertex_faces;
  /// Neighbouring vertices of each vertex, same cyclic order as vertex_faces.
  std::vector<std::vector<int>> vertex_neighbors;

  int e() const { return static_cast<int>(edges.size()); }
  /// Index of edge {a,b} or -1.
  int find_edge(int a, int b) const;
};

/// Builds the topology; throws Error(ValidationError) if the face cycles are not a
/// closed 2-manifold (every directed edge once, its reverse once).
Topology topology(const std::vector<Cycle>& faces, int nvertices);

template <class T>
Topology topology(const BasicPolyhedron<T>& p) {
  return topology(p.faces, p.v());
}

/// Face plane <n, x> = d with the (unnormalized) outward Newell normal.
template <class T>
struct Plane {
  BasicVec3<T> n;
  T d{};
};

template <class T>
Plane<T> face_plane(const BasicPolyhedron<T>& p, int face) {
  const Cycle& c = p.faces[face];
  BasicVec3<T> n(T(0), T(0), T(0));
  for (size_t i = 0; i < c.size(); ++i) {
    const auto& u = p.vertices[c[i]];
    const auto& w = p.vertices[c[(i + 1) % c.size()]];
    n += cross(u, w);
  }
  return {n, dot(n, p.vertices[c[0]])};
}

PolyhedronD to_double(const Polyhedron& p);

/// Rotates each cycle to start at its smallest index and sorts faces.
void canonicalize_faces(std::vector<Cycle>& faces);

/// Re-indexes vertices in lexicographic order and canonicalizes faces.
Polyhedron canonical(const Polyhedron& p);

Polyhedron translate(const Polyhedron& p, const Vec3& t);
Polyhedron scale(const Polyhedron& p, const Scalar& s);

/// Largest vertex-to-vertex distance, in the float backend.
double diameter(const Polyhedron& p);
double diameter(const PolyhedronD& p);

/// Identical vertices and faces after canonicalization.
bool same_polyhedron(const Polyhedron& a, const Polyhedron& b);

/// Regular tetrahedron with vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
Polyhedron regular_tetrahedron();
/// Axis-parallel box [lo, hi].
Polyhedron box(const Vec3& lo, const Vec3& hi);
/// Cross-polytope with vertices +-r e_i.
Polyhedron octahedron(const Scalar& r);

}  // namespace equilib
