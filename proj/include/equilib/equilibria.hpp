#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equilib/geometry.hpp"

namespace equilib {

enum class Kind { Stable, Saddle, Unstable, None, Degenerate };

const char* to_string(Kind k);

enum class SiteType { Face, Edge, Vertex };

const char* to_string(SiteType t);

struct Site {
  SiteType type;
  int index;
};

struct EquilibriumReport {
  Vec3 reference;
  std::vector<Edge> edges;
  std::vector<Kind> faces, edge_status, vertices;
  /// Signed slack of the weakest inequality of each site, in length units;
  /// positive means the site carries an equilibrium.
  std::vector<double> face_margin, edge_margin, vertex_margin;
  int S = 0, U = 0, H = 0;
  bool degenerate = false;

  int f() const { return static_cast<int>(faces.size()); }
  int v() const { return static_cast<int>(vertices.size()); }
  int e() const { return static_cast<int>(edges.size()); }
  int n() const { return f() + v() + e(); }
  int N() const { return S + U + H; }
  /// n - N; only meaningful when !degenerate.
  int complexity() const { return n() - N(); }
  std::vector<Site> degenerate_sites() const;
};

/// Throws Error(ReferenceOutside) unless c is strictly interior.
Kind classify_site(const Polyhedron& p, const Vec3& c, Site site);

/// Classifies every site w.r.t. c (default: the centroid).
EquilibriumReport analyze(const Polyhedron& p, const std::optional<Vec3>& c = std::nullopt);

/// analyze() that throws Error(DegenerateEquilibria) when any site is degenerate.
EquilibriumReport analyze_strict(const Polyhedron& p,
                                 const std::optional<Vec3>& c = std::nullopt);

struct IdentityResiduals {
  int poincare_hopf = 0;  // S + U - H - 2
  int euler = 0;          // f + v - e - 2
  int complexity = 0;     // (n - N) - 2 (f + v - S - U)
  bool ok() const { return poincare_hopf == 0 && euler == 0 && complexity == 0; }
};

IdentityResiduals check_balance_identities(const EquilibriumReport& rep);

/// Float backend, for inputs with irrational coordinates. A predicate value whose
/// magnitude is below tau * diameter counts as zero.
struct ReportD {
  std::vector<Kind> faces, edge_status, vertices;
  std::vector<Edge> edges;
  int S = 0, U = 0, H = 0;
  bool degenerate = false;
};

ReportD analyze_float(const PolyhedronD& p, const Vec3d& c, double tau = 1e-9);

struct MidscribedResult {
  double tangency_residual = 0;  // worst | dist(o, edge line) - 1 |
  int sites = 0;
  int equilibria = 0;
  bool pass() const { return sites > 0 && equilibria == sites; }
};

/// Checks that every edge touches the unit sphere about o and that every face,
/// edge and vertex carries an equilibrium w.r.t. o.
/// Throws Error(NotMidscribed) if the tangency residual exceeds `tangency_tol`.
MidscribedResult verify_midscribed_equilibria(const PolyhedronD& p,
                                              const Vec3d& o = {0, 0, 0},
                                              double tangency_tol = 1e-9,
                                              double tau = 1e-9);

}  // namespace equilib
