#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equilib/search.hpp"

namespace equilib {

// ---------------------------------------------------------------- recipes

struct BaseSolid {
  /// "catalog" (S, U), "pyramid" (S, h), "conway" (m, r0, a, b, rho) or
  /// "mono_pyramid" (m, r0, apex x, apex y, apex h, tilt) or "hull" (x, y, z, ...).
  std::string name;
  std::vector<Scalar> params;
};

struct RecipeStep {
  std::string name;
  std::vector<int> site;
  std::vector<Scalar> params;
};

struct Recipe {
  int S = 0, U = 0;
  BaseSolid base;
  std::vector<RecipeStep> steps;
};

std::string to_text(const Recipe& r);

/// Throws Error(ParseError) with the offending line.
Recipe parse_recipe(std::string_view text);

Polyhedron build_base(const BaseSolid& base);

/// Re-applies one recorded step exactly.
Polyhedron apply_step(const Polyhedron& p, const RecipeStep& step);

/// Rebuilds the recorded witness; with `verify`, checks the final class against the
/// target. Throws Error(ClassNotAchieved) on mismatch.
Polyhedron replay(const Recipe& r, bool verify = true);

// ---------------------------------------------------------------- base solids

/// Pyramid over a rationalized regular (S-1)-gon with unit inradius and apex
/// (0, 0, h), verified to be minimal in (S, S). On failure retries with h scaled
/// by 2, 1/2, 4, 1/4, ...; throws Error(ClassNotAchieved) when none verifies.
Polyhedron pyramid(int S, const Scalar& h);

/// The pyramid with exactly the given h, unverified.
Polyhedron pyramid_exact(int S, const Scalar& h);

/// True if catalog(S, U) exists.
bool in_catalog(int S, int U);

/// Tetrahedra for {2,3,4}^2, quadrilateral pyramids for (S,5), (5,U) with
/// S, U <= 4, and pyramid(5, 1) for (5,5). Throws Error(UnknownCatalogEntry).
Polyhedron catalog(int S, int U);

// ---------------------------------------------------------------- manipulations

/// A tuned manipulation: the new polyhedron and the step that replays it.
struct Built {
  Polyhedron poly;
  RecipeStep step;
  int trials = 0;
};

/// Cuts the degree-3 vertex q by a plane orthogonal to c - q: (S+1, U+2).
/// Throws Error(BadSite), Error(ClassNotAchieved).
Built truncate_vertex(const Polyhedron& p, int q, const SearchParams& sp = {});

/// Erects a flat tetrahedron over the stable triangular face F: (S+2, U+1).
Built erect_tetrahedron(const Polyhedron& p, int F, const SearchParams& sp = {});

/// Vertices q1, ..., qj in order along the boundary of `face`.
struct TruncationSite {
  int face = -1;
  std::vector<int> chain;
};

/// Admissible sites for face_truncate, best first. With `one_sided`, q1 is an
/// unstable vertex instead of the end of a saddle edge.
std::vector<TruncationSite> truncation_sites(const Polyhedron& p, bool one_sided);

/// Oblique cut of F near two saddle edges: (S, U+2), f+1, v+2; one-sided: (S, U+1),
/// f+1, v+1. Throws Error(ConditionViolated) naming the failed condition.
Built face_truncate(const Polyhedron& p, const TruncationSite& site, const SearchParams& sp = {},
                    bool one_sided = false);

struct BuildSite {
  int face = -1;
  int q1 = -1, qa = -1, qb = -1;  // qa -> qb is the saddle edge, in face order
};

/// Admissible sites for vertex_build, best first.
std::vector<BuildSite> build_sites(const Polyhedron& p);

/// Flat pyramid over (q1, qa, qb) inside F, F re-cut through its apex:
/// (S+2, U), f+2, v+1; one-sided: (S+1, U).
Built vertex_build(const Polyhedron& p, const BuildSite& site, const SearchParams& sp = {},
                   bool one_sided = false);

/// Float backend: moves the degree-3 vertex q (all incident faces triangles) until
/// the centroid lies within 1e-12 * diameter of o. Throws Error(BadSite),
/// Error(NoConvergence).
PolyhedronD recenter_vertex(const PolyhedronD& p, int q, const Vec3d& o = {0, 0, 0},
                            int* iterations = nullptr);

// ---------------------------------------------------------------- monostatic solids

struct ConwayParams {
  int m = 9;
  Scalar r0 = 1;
  Scalar a = 1, b = 20;
  /// Rotation of both caps about the symmetry axis; nonzero gives the rotated solid.
  Scalar rho = 0;
  Scalar apex_x = 0, apex_y = rational(-19, 20), apex_h = rational(1, 10);
  /// Slope of the bottom edge of the base polygon (symmetry breaking).
  Scalar tilt = 0;
};

/// Vertices of the spiral polygon, counterclockwise, bottom edge on y = -r0.
std::vector<std::pair<Scalar, Scalar>> spiral_polygon(const ConwayParams& cp);

/// The oblique prism over the spiral polygon, unverified.
Polyhedron conway_prism(const ConwayParams& cp);

struct ConwayMeasures {
  double r = 0;   // centroid height over the bottom face
  double r0 = 0;  // distance of the centroid axis to the bottom edge
};

ConwayMeasures conway_measures(const Polyhedron& p, const ConwayParams& cp);

/// Verified mono-stable solid. Throws Error(ParamsOutOfWindow) for m < 9 or
/// negative a, b, and Error(NotMonostatic) listing extra equilibria.
Polyhedron conway_solid(const ConwayParams& cp = {});

/// Centroid height of the plate (a -> 0, b = 0) or the wedge (a = 0) limit in units
/// of r0, computed in closed form over the polygon.
double conway_limit_height(int m, bool wedge);

/// Pyramid over the spiral polygon with apex near the bottom edge; symmetric: (3,1),
/// otherwise the apex is moved off the symmetry plane: (2,1).
Polyhedron mono_unstable_pyramid(const ConwayParams& cp = {}, bool symmetric = true);

/// The unverified pyramid for the given parameters.
Polyhedron mono_pyramid_exact(const ConwayParams& cp);

// ---------------------------------------------------------------- class driver

struct BuildOptions {
  SearchParams search;
  /// Build the many-stable cells as recentered polars of many-unstable witnesses
  /// instead of by vertex_build chains.
  bool polar_route = false;
};

struct Witness {
  Polyhedron poly;
  Recipe recipe;
  std::string route;
};

/// Witness for (S, U) following the case analysis; for S, U >= 2 its complexity is
/// 2 R(S, U). Throws Error(Unsupported) for (1,1), (1,2), (1,3).
Witness build_class(int S, int U, const BuildOptions& opt = {});

}  // namespace equilib
