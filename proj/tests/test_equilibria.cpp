#include <doctest.h>

#include <cmath>

#include "equilib/complexity.hpp"
#include "equilib/equilibria.hpp"
#include "helpers.hpp"
#include "table_data.hpp"

using namespace equilib;
using namespace test_helpers;

TEST_CASE("cube sites about its centre") {
  Polyhedron c = box({0, 0, 0}, {1, 1, 1});
  Vec3 o(rational(1, 2), rational(1, 2), rational(1, 2));
  for (int f = 0; f < 6; ++f) CHECK(classify_site(c, o, {SiteType::Face, f}) == Kind::Stable);
  for (int v = 0; v < 8; ++v) CHECK(classify_site(c, o, {SiteType::Vertex, v}) == Kind::Unstable);
  for (int e = 0; e < 12; ++e) CHECK(classify_site(c, o, {SiteType::Edge, e}) == Kind::Saddle);
  auto r = analyze(c);
  CHECK(r.S == 6);
  CHECK(r.U == 8);
  CHECK(r.H == 12);
  CHECK(r.complexity() == 0);
  CHECK(check_balance_identities(r).ok());
  CHECK_THROWS_AS(classify_site(c, {2, 0, 0}, {SiteType::Face, 0}), Error);
  CHECK_THROWS_AS(analyze(c, Vec3(0, 0, 0)), Error);
}

TEST_CASE("tetrahedron table flags, site by site") {
  for (const auto& row : table_data::tetra_rows()) {
    CAPTURE(row.S);
    CAPTURE(row.U);
    Vec3 A(0, 0, 0), B(1, 0, 0), C(parse_scalar(row.cx), parse_scalar(row.cy), 0),
        D(parse_scalar(row.dx), parse_scalar(row.dy), parse_scalar(row.dz));
    Polyhedron p = hull_from_points({A, B, C, D});
    auto rep = analyze(p);
    REQUIRE_FALSE(rep.degenerate);
    CHECK(rep.S == row.S);
    CHECK(rep.U == row.U);
    int a = index_of(p, A), b = index_of(p, B), c = index_of(p, C), d = index_of(p, D);
    std::vector<std::vector<int>> faces = {{a, b, c}, {a, b, d}, {a, c, d}, {b, c, d}};
    for (int k = 0; k < 4; ++k) {
      Kind want = row.faces[k] == '1' ? Kind::Stable : Kind::None;
      CHECK(rep.faces[static_cast<size_t>(face_with(p, faces[static_cast<size_t>(k)]))] == want);
    }
    int vs[4] = {a, b, c, d};
    for (int k = 0; k < 4; ++k) {
      Kind want = row.vertices[k] == '1' ? Kind::Unstable : Kind::None;
      CHECK(rep.vertices[static_cast<size_t>(vs[k])] == want);
    }
    Topology topo = topology(p);
    int pairs[6][2] = {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
    for (int k = 0; k < 6; ++k) {
      Kind want = row.edges[k] == '1' ? Kind::Saddle : Kind::None;
      CHECK(rep.edge_status[static_cast<size_t>(topo.find_edge(pairs[k][0], pairs[k][1]))] == want);
    }
    CHECK(check_balance_identities(rep).ok());
    CHECK(rep.complexity() == 2 * R_closed(row.S, row.U));
  }
}

TEST_CASE("row (2,2) named sites") {
  Vec3 A(0, 0, 0), B(1, 0, 0), C = V("3.2", "1.9", "0"), D = V("-2.2", "0.3", "1.8");
  Polyhedron p = hull_from_points({A, B, C, D});
  Vec3 c = mass_properties(p).centroid;
  int a = index_of(p, A), b = index_of(p, B), cc = index_of(p, C), d = index_of(p, D);
  Topology t = topology(p);
  CHECK(classify_site(p, c, {SiteType::Face, face_with(p, {a, cc, d})}) == Kind::Stable);
  CHECK(classify_site(p, c, {SiteType::Face, face_with(p, {a, b, cc})}) == Kind::None);
  CHECK(classify_site(p, c, {SiteType::Vertex, cc}) == Kind::Unstable);
  CHECK(classify_site(p, c, {SiteType::Vertex, a}) == Kind::None);
  CHECK(classify_site(p, c, {SiteType::Edge, t.find_edge(a, b)}) == Kind::Saddle);
  CHECK(classify_site(p, c, {SiteType::Edge, t.find_edge(a, cc)}) == Kind::None);
  auto rep = analyze(p);
  CHECK(rep.H == 2);
  CHECK(complexity_of(p) == 8);
}

TEST_CASE("pentahedron table classes") {
  for (const auto& row : table_data::penta_rows()) {
    CAPTURE(row.S);
    CAPTURE(row.U);
    Polyhedron p = hull_from_points(
        {{0, 0, 0}, {0, 1, 0}, {parse_scalar(row.cx), parse_scalar(row.cy), 0},
         {parse_scalar(row.dx), parse_scalar(row.dy), 0},
         {parse_scalar(row.ex), parse_scalar(row.ey), parse_scalar(row.ez)}});
    auto rep = analyze_strict(p);
    CHECK(rep.S == row.S);
    CHECK(rep.U == row.U);
    CHECK(rep.n() == 18);
    CHECK(rep.complexity() == 20 - 2 * row.S - 2 * row.U);
  }
}

TEST_CASE("regular tetrahedron and square pyramid apex") {
  auto r = analyze(regular_tetrahedron());
  CHECK(r.S == 4);
  CHECK(r.U == 4);
  CHECK(r.H == 6);
  for (const char* h : {"1/100", "1/3", "1", "7", "250"}) {
    Polyhedron p = hull_from_points({{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {0, 0, parse_scalar(h)}});
    Vec3 c(0, 0, parse_scalar(h) / 4);
    CHECK(classify_site(p, c, {SiteType::Vertex, index_of(p, {0, 0, parse_scalar(h)})}) ==
          Kind::Unstable);
  }
}

TEST_CASE("degenerate sites are flagged, not tie-broken") {
  // c projects onto the hypotenuse of the bottom face.
  Polyhedron p = hull_from_points({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {3, 3, 4}});
  Vec3 c(2, 2, rational(1, 10));
  auto r = analyze(p, c);
  CHECK(r.degenerate);
  CHECK_FALSE(r.degenerate_sites().empty());
  CHECK_THROWS_AS(analyze_strict(p, c), Error);
}

TEST_CASE("identities on random hulls") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    Polyhedron p = random_hull(rng, 10 + k % 20);
    auto r = analyze(p);
    CHECK(r.f() + r.v() - r.e() == 2);
    if (r.degenerate) continue;
    CHECK(check_balance_identities(r).ok());
    CHECK(r.S <= r.f());
    CHECK(r.U <= r.v());
  }
}

TEST_CASE("polar correspondence of sites") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 30; ++k) {
    Polyhedron p = random_hull(rng, 6 + k % 15);
    Vec3 o = mass_properties(p).centroid;
    Polyhedron d = polar_dual(p, o);
    auto rp = analyze(p, o), rd = analyze(d, o);
    if (rp.degenerate) continue;
    CHECK_FALSE(rd.degenerate);
    for (int f = 0; f < p.f(); ++f)
      CHECK((rp.faces[static_cast<size_t>(f)] == Kind::Stable) ==
            (rd.vertices[static_cast<size_t>(f)] == Kind::Unstable));
    for (int v = 0; v < p.v(); ++v)
      CHECK((rp.vertices[static_cast<size_t>(v)] == Kind::Unstable) ==
            (rd.faces[static_cast<size_t>(v)] == Kind::Stable));
    Topology td = topology(d);
    for (int e = 0; e < rp.e(); ++e) {
      const Edge& ed = rp.edges[static_cast<size_t>(e)];
      int de = td.find_edge(ed.left, ed.right);
      REQUIRE(de >= 0);
      CHECK((rp.edge_status[static_cast<size_t>(e)] == Kind::Saddle) ==
            (rd.edge_status[static_cast<size_t>(de)] == Kind::Saddle));
    }
    CHECK(rd.S == rp.U);
    CHECK(rd.U == rp.S);
    CHECK(rd.H == rp.H);
  }
}

TEST_CASE("classification survives tiny rational perturbations") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> u(-1000, 1000);
  int checked = 0;
  for (int k = 0; k < 20; ++k) {
    Polyhedron p = random_hull(rng, 4 + k % 8);
    auto r = analyze(p);
    if (r.degenerate) continue;
    Polyhedron q = p;
    Scalar step = from_double(diameter(p)) / Scalar(1000000000) / Scalar(1000);
    for (auto& v : q.vertices) v += Vec3(step * u(rng), step * u(rng), step * u(rng));
    auto rq = analyze(q);
    if (validate(q).ok()) {
      CHECK(rq.faces == r.faces);
      CHECK(rq.vertices == r.vertices);
      CHECK(rq.edge_status == r.edge_status);
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("midscribed cube and octahedron carry all equilibria") {
  double h = std::sqrt(2.0) / 2;
  PolyhedronD cube = to_double(box({-1, -1, -1}, {1, 1, 1}));
  for (auto& v : cube.vertices) v *= h;
  auto rc = verify_midscribed_equilibria(cube);
  CHECK(rc.tangency_residual < 1e-12);
  CHECK(rc.sites == 26);
  CHECK(rc.pass());
  PolyhedronD oct = to_double(octahedron(1));
  for (auto& v : oct.vertices) v *= std::sqrt(2.0);
  auto ro = verify_midscribed_equilibria(oct);
  CHECK(ro.tangency_residual < 1e-12);
  CHECK(ro.pass());
  CHECK_THROWS_AS(verify_midscribed_equilibria(to_double(box({0, 0, 0}, {1, 1, 1}))), Error);
}
