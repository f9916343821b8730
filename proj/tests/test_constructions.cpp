#include <doctest.h>

#include "equilib/complexity.hpp"
#include "equilib/constructions.hpp"
#include "helpers.hpp"
#include "table_data.hpp"

using namespace equilib;
using test_helpers::V;

namespace {

// Every vertex of `inner` satisfies every face inequality of `outer`.
bool contained(const Polyhedron& inner, const Polyhedron& outer) {
  for (int f = 0; f < outer.f(); ++f) {
    auto pl = face_plane(outer, f);
    for (const Vec3& x : inner.vertices)
      if (dot(pl.n, x) > pl.d) return false;
  }
  return true;
}

struct Counts {
  int S, U, f, v;
};

Counts counts(const Polyhedron& p) {
  auto r = analyze_strict(p);
  return {r.S, r.U, p.f(), p.v()};
}

}  // namespace

TEST_CASE("pyramids are minimal in their class") {
  for (int S = 4; S <= 12; ++S) {
    CAPTURE(S);
    Polyhedron p = pyramid(S, 1);
    auto r = analyze_strict(p);
    CHECK(r.S == S);
    CHECK(r.U == S);
    CHECK(r.complexity() == 0);
    CHECK(p.f() == S);
    CHECK(p.v() == S);
    // float backend as a second route
    PolyhedronD d = to_double(p);
    auto rd = analyze_float(d, centroid(d));
    CHECK(rd.S == S);
    CHECK(rd.U == S);
  }
  CHECK_THROWS_AS(pyramid(3, 1), Error);
  CHECK_THROWS_AS(pyramid_exact(5, 0), Error);
}

TEST_CASE("catalog agrees with the printed tables") {
  for (const auto& row : table_data::tetra_rows()) {
    CAPTURE(row.S);
    CAPTURE(row.U);
    Polyhedron ref = hull_from_points({V("0", "0", "0"), V("1", "0", "0"), V(row.cx, row.cy, "0"),
                                       V(row.dx, row.dy, row.dz)});
    CHECK(same_polyhedron(catalog(row.S, row.U), ref));
  }
  for (const auto& row : table_data::penta_rows()) {
    CAPTURE(row.S);
    CAPTURE(row.U);
    Polyhedron ref = hull_from_points({V("0", "0", "0"), V("0", "1", "0"), V(row.cx, row.cy, "0"),
                                       V(row.dx, row.dy, "0"), V(row.ex, row.ey, row.ez)});
    CHECK(same_polyhedron(catalog(row.S, row.U), ref));
  }
  CHECK(same_polyhedron(catalog(4, 4), regular_tetrahedron()));
  CHECK(in_catalog(5, 5));
  CHECK_FALSE(in_catalog(6, 6));
  CHECK_THROWS_AS(catalog(6, 6), Error);
}

TEST_CASE("vertex truncation adds one stable and two unstable points") {
  Polyhedron p = pyramid(5, 1);
  Topology t = topology(p);
  int apex = -1;
  for (int v = 0; v < p.v(); ++v)
    if (t.vertex_faces[static_cast<size_t>(v)].size() == 4) apex = v;
  int base_vertex = apex == 0 ? 1 : 0;
  Built b = truncate_vertex(p, base_vertex);
  Counts c = counts(b.poly);
  CHECK(c.S == 6);
  CHECK(c.U == 7);
  CHECK(c.f == 6);
  CHECK(c.v == 7);
  CHECK(contained(b.poly, p));
  CHECK(b.step.name == "truncate_vertex");
  CHECK(same_polyhedron(apply_step(p, b.step), b.poly));
  CHECK_THROWS_AS(truncate_vertex(p, apex), Error);  // degree 4
}

TEST_CASE("erecting a tetrahedron adds two stable and one unstable point") {
  Polyhedron p = pyramid(5, 1);
  auto r = analyze(p);
  int F = -1;
  for (int f = 0; f < p.f(); ++f)
    if (p.faces[static_cast<size_t>(f)].size() == 3 && r.faces[static_cast<size_t>(f)] == Kind::Stable) F = f;
  REQUIRE(F >= 0);
  Built b = erect_tetrahedron(p, F);
  Counts c = counts(b.poly);
  CHECK(c.S == 7);
  CHECK(c.U == 6);
  CHECK(c.f == 7);
  CHECK(c.v == 6);
  CHECK(contained(p, b.poly));
  CHECK(same_polyhedron(apply_step(p, b.step), b.poly));
  int quad = -1;
  for (int f = 0; f < p.f(); ++f)
    if (p.faces[static_cast<size_t>(f)].size() == 4) quad = f;
  CHECK_THROWS_AS(erect_tetrahedron(p, quad), Error);
}

TEST_CASE("face truncation adds two unstable points, one-sided adds one") {
  Polyhedron p = catalog(3, 4);
  auto sites = truncation_sites(p, false);
  REQUIRE_FALSE(sites.empty());
  Built b = face_truncate(p, sites.front());
  Counts c = counts(b.poly);
  CHECK(c.S == 3);
  CHECK(c.U == 6);
  CHECK(c.f == 5);
  CHECK(c.v == 6);
  CHECK(contained(b.poly, p));
  CHECK(same_polyhedron(apply_step(p, b.step), b.poly));

  Polyhedron q = catalog(3, 5);
  auto one = truncation_sites(q, true);
  REQUIRE_FALSE(one.empty());
  Built b1 = face_truncate(q, one.front(), {}, true);
  Counts c1 = counts(b1.poly);
  CHECK(c1.S == 3);
  CHECK(c1.U == 6);
  CHECK(c1.f == q.f() + 1);
  CHECK(c1.v == q.v() + 1);

  TruncationSite bad = sites.front();
  bad.chain.resize(2);
  CHECK_THROWS_AS(face_truncate(p, bad), Error);
}

TEST_CASE("vertex build adds two stable points, one-sided adds one") {
  Polyhedron p = catalog(4, 3);
  auto sites = build_sites(p);
  REQUIRE_FALSE(sites.empty());
  Built b = vertex_build(p, sites.front());
  Counts c = counts(b.poly);
  CHECK(c.S == 6);
  CHECK(c.U == 3);
  CHECK(c.f == 6);
  CHECK(c.v == 5);
  CHECK(same_polyhedron(apply_step(p, b.step), b.poly));

  Built b1 = vertex_build(p, sites.front(), {}, true);
  Counts c1 = counts(b1.poly);
  CHECK(c1.S == 5);
  CHECK(c1.U == 3);

  // the regular tetrahedron is symmetric enough to violate the collinearity condition
  CHECK(build_sites(regular_tetrahedron()).empty());
}

TEST_CASE("recipe text round trip and replay") {
  Witness w = build_class(7, 3);
  std::string text = to_text(w.recipe);
  Recipe back = parse_recipe(text);
  CHECK(to_text(back) == text);
  CHECK(back.S == 7);
  CHECK(back.U == 3);
  CHECK(same_polyhedron(replay(back), w.poly));
  // replay is deterministic
  CHECK(same_polyhedron(replay(back), replay(back)));

  Recipe wrong = back;
  wrong.U = 4;
  CHECK_THROWS_AS(replay(wrong), Error);
}

TEST_CASE("recipe parse errors name the line") {
  auto line_of = [](const char* text) -> std::string {
    try {
      parse_recipe(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return e.what();
    }
    return "";
  };
  CHECK(line_of("RECIPE v2\n").find("line 1") != std::string::npos);
  CHECK(line_of("RECIPE v1\nTARGET 2 x\n").find("line 2") != std::string::npos);
  CHECK(line_of("RECIPE v1\nTARGET 2 2\nBASE catalog 2 2\nSTEP foo site=1\n").find("line 4") !=
        std::string::npos);
  CHECK(line_of("RECIPE v1\nTARGET 2 2\n").find("missing") != std::string::npos);
  CHECK_THROWS_AS(build_base({"dodecahedron", {}}), Error);
  CHECK_THROWS_AS(apply_step(catalog(2, 2), {"twist", {0}, {1}}), Error);
}

TEST_CASE("spiral polygon") {
  auto poly = spiral_polygon({});
  CHECK(poly.size() == 17);
  // bottom edge on y = -r0, symmetric about x = 0
  CHECK(poly.front().second == -1);
  CHECK(poly.back().second == -1);
  CHECK(poly.front().first == -poly.back().first);
  // |A_i| grows by 1 / cos(pi / m) per step
  double ratio = std::hypot(to_double(poly[1].first), to_double(poly[1].second)) /
                 std::hypot(to_double(poly[0].first), to_double(poly[0].second));
  CHECK(ratio == doctest::Approx(1 / std::cos(M_PI / 9)).epsilon(1e-8));
}

TEST_CASE("Conway solid") {
  Polyhedron p = conway_solid();
  auto r = analyze_strict(p);
  CHECK(r.S == 1);
  CHECK(r.U == 4);
  CHECK(p.f() == 19);
  CHECK(p.v() == 34);
  CHECK(r.complexity() == 96);
  auto m = conway_measures(p, {});
  CHECK(m.r < m.r0);

  ConwayParams small;
  small.m = 8;
  CHECK_THROWS_AS(conway_solid(small), Error);
  ConwayParams neg;
  neg.a = -1;
  CHECK_THROWS_AS(conway_solid(neg), Error);
  // a thick plate over the same polygon is not mono-stable
  ConwayParams plate;
  plate.b = 0;
  CHECK_THROWS_AS(conway_solid(plate), Error);
}

TEST_CASE("limit heights agree with exact prism centroids") {
  // plate: the prism with b = 0 has the polygon centroid
  ConwayParams plate;
  plate.b = 0;
  Vec3 cp = mass_properties(conway_prism(plate)).centroid;
  CHECK(conway_limit_height(9, false) == doctest::Approx(to_double(Scalar(cp.y + 1))).epsilon(1e-12));
  // wedge: a = 0
  ConwayParams wedge;
  wedge.a = 0;
  wedge.b = 1;
  Vec3 cw = mass_properties(conway_prism(wedge)).centroid;
  CHECK(conway_limit_height(9, true) == doctest::Approx(to_double(Scalar(cw.y + 1))).epsilon(1e-12));
  CHECK(conway_limit_height(9, true) < 1);
  CHECK(conway_limit_height(9, false) > 1);
}

TEST_CASE("mono-unstable pyramids") {
  Polyhedron p3 = mono_unstable_pyramid();
  auto r3 = analyze_strict(p3);
  CHECK(r3.S == 3);
  CHECK(r3.U == 1);
  CHECK(r3.complexity() == 64);
  Polyhedron p2 = mono_unstable_pyramid({}, false);
  auto r2 = analyze_strict(p2);
  CHECK(r2.S == 2);
  CHECK(r2.U == 1);
  CHECK(r2.complexity() == 66);
  ConwayParams off;
  off.apex_x = rational(1, 100);
  CHECK_THROWS_AS(mono_unstable_pyramid(off, true), Error);
}

TEST_CASE("recentering a vertex moves the centroid to the target") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Polyhedron t = test_helpers::random_hull(rng, 4);
    PolyhedronD d = to_double(t);
    Vec3d target = centroid(d) * 0.9 + d.vertices[1] * 0.1;
    int iterations = 0;
    PolyhedronD moved = recenter_vertex(d, 0, target, &iterations);
    CHECK(norm(centroid(moved) - target) <= 1e-12 * diameter(d));
    for (int v = 1; v < d.v(); ++v) CHECK(norm(moved.vertices[static_cast<size_t>(v)] - d.vertices[static_cast<size_t>(v)]) == 0);
  }
  PolyhedronD oct = to_double(octahedron(1));
  CHECK_THROWS_AS(recenter_vertex(oct, 0), Error);
  PolyhedronD cube = to_double(box({-1, -1, -1}, {1, 1, 1}));
  CHECK_THROWS_AS(recenter_vertex(cube, 0), Error);
}

TEST_CASE("build_class follows the case analysis") {
  for (auto [S, U] : {std::pair{1, 1}, {1, 2}, {1, 3}, {0, 4}}) CHECK_THROWS_AS(build_class(S, U), Error);
  for (auto [S, U] : {std::pair{6, 5}, {5, 6}, {2, 6}, {6, 2}, {4, 7}, {7, 4}}) {
    CAPTURE(S);
    CAPTURE(U);
    Witness w = build_class(S, U);
    auto r = analyze_strict(w.poly);
    CHECK(r.S == S);
    CHECK(r.U == U);
    CHECK(r.complexity() == 2 * R_closed(S, U));
    CHECK(same_polyhedron(replay(w.recipe), w.poly));
  }
}
