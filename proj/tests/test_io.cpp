#include <doctest.h>

#include <json.hpp>

#include "equilib/constructions.hpp"
#include "equilib/io.hpp"
#include "helpers.hpp"

using namespace equilib;
using test_helpers::V;

namespace {

const char* kTetra =
    "OFF\n"
    "# unit corner\n"
    "4 4 6\n"
    "0 0 0\n"
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "3 0 2 1\n"
    "3 0 1 3\n"
    "3 0 3 2\n"
    "3 1 2 3\n";

std::string error_of(const std::string& text) {
  try {
    parse_off(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::string fixture(const std::string& name) { return read_file(std::string(FIXTURE_DIR) + "/" + name); }

}  // namespace

TEST_CASE("minimal tetrahedron") {
  Polyhedron p = parse_off(kTetra);
  CHECK(p.v() == 4);
  CHECK(p.f() == 4);
  CHECK(validate(p).ok());
  CHECK(mass_properties(p).volume == rational(1, 6));
}

TEST_CASE("fraction and decimal literals are exact") {
  std::string text = kTetra;
  text.replace(text.find("1 0 0\n"), 6, "16/5 0 0\n");
  Polyhedron p = parse_off(text);
  CHECK(p.vertices[1].x == rational(16, 5));
  text = kTetra;
  text.replace(text.find("0 1 0\n"), 6, "0 2.2 0\n");
  CHECK(parse_off(text).vertices[2].y == rational(11, 5));
}

TEST_CASE("faces are re-oriented outward") {
  std::string text = "OFF\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 0 3 1\n3 0 2 3\n3 3 2 1\n";
  Polyhedron p = parse_off(text);
  CHECK(validate(p).ok());
  CHECK(same_polyhedron(p, parse_off(kTetra)));
}

TEST_CASE("header fused with counts, trailing color fields") {
  std::string text = "OFF 4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 2 1 255 0 0\n3 0 1 3\n3 0 3 2\n3 1 2 3\n";
  CHECK(parse_off(text).f() == 4);
}

TEST_CASE("parse errors carry line and column") {
  std::string bad_number = kTetra;
  bad_number.replace(bad_number.find("0 0 1\n"), 6, "0 x 1\n");
  CHECK(error_of(bad_number).find("line 7, column 3") != std::string::npos);
  CHECK(error_of("OFF\n4 4 6\n0 0 0\n").find("line 4") != std::string::npos);
  std::string bad_index = kTetra;
  bad_index.replace(bad_index.find("3 1 2 3"), 7, "3 1 2 9");
  CHECK(error_of(bad_index).find("line 11, column 7") != std::string::npos);
  CHECK(error_of("").find("empty") != std::string::npos);
  CHECK(error_of(std::string(kTetra) + "1 2 3\n").find("line 12") != std::string::npos);
  // a face missing: not a closed surface
  std::string open = "OFF\n4 3 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 2 1\n3 0 1 3\n3 0 3 2\n";
  try {
    parse_off(open);
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
  }
}

TEST_CASE("emit_off is canonical and round-trips") {
  Polyhedron cube = box({0, 0, 0}, {1, 1, 1});
  std::string text = emit_off(cube);
  int vertex_lines = 0, face_lines = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == "OFF") continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.size() == 3 && vertex_lines < 8 && line != "8 6 12") ++vertex_lines;
    if (tok.size() == 5 && tok[0] == "4") ++face_lines;
  }
  CHECK(vertex_lines == 8);
  CHECK(face_lines == 6);
  CHECK(text.find("8 6 12") != std::string::npos);

  for (auto [S, U] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {4, 4}, {2, 5},
                      {3, 5}, {4, 5}, {5, 2}, {5, 3}, {5, 4}, {5, 5}}) {
    Polyhedron p = catalog(S, U);
    std::string t = emit_off(p);
    Polyhedron back = parse_off(t);
    CHECK(same_polyhedron(back, p));
    CHECK(emit_off(back) == t);
  }
}

TEST_CASE("decimal output is flagged lossy") {
  Polyhedron p = hull_from_points({V("0", "0", "0"), V("1/3", "0", "0"), V("0", "1", "0"), V("0", "0", "1")});
  std::string t = emit_off(p, true);
  CHECK(t.find("lossy") != std::string::npos);
  CHECK(t.find("0.333333333333") != std::string::npos);
  CHECK(emit_off(p).find("1/3") != std::string::npos);
}

TEST_CASE("shipped fixtures classify as labeled") {
  for (auto [name, S, U] : {std::tuple{"tetra_22.off", 2, 2}, {"tetra_24.off", 2, 4}, {"tetra_43.off", 4, 3},
                            {"penta_25.off", 2, 5}, {"penta_54.off", 5, 4}}) {
    CAPTURE(name);
    auto r = analyze(parse_off(fixture(name)));
    CHECK(r.S == S);
    CHECK(r.U == U);
  }
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("analysis report survives a JSON round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Polyhedron p = test_helpers::random_hull(rng, 10);
    std::string text = emit_off(p);
    auto r = analyze(p);
    auto j = nlohmann::json::parse(report_json(p, r, sha256_hex(text)));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["input_sha256"] == sha256_hex(text));
    int S = j["equilibrium"]["S"], U = j["equilibrium"]["U"], H = j["equilibrium"]["H"];
    int n = j["combinatorial"]["n"], N = j["equilibrium"]["N"];
    CHECK(int(j["complexity"]) == n - N);
    CHECK(j["sites"]["faces"].size() == static_cast<size_t>(p.f()));
    if (!j["degenerate"].get<bool>()) CHECK(S + U - H == 2);
    int stable = 0;
    for (const auto& f : j["sites"]["faces"]) stable += f["status"] == "stable";
    CHECK(stable == S);
  }
}

TEST_CASE("grid CSV") {
  std::string csv = grid_csv(grid(10, 10));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "S,U,pair,lower,upper,status,notes");
  int rows = 0;
  bool saw_14 = false;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cols;
    std::string cur;
    std::istringstream ls(line);
    while (std::getline(ls, cur, ',')) cols.push_back(cur);
    REQUIRE(cols.size() >= 6);
    int S = std::stoi(cols[0]), U = std::stoi(cols[1]);
    if (S == 1 && U == 4) {
      saw_14 = true;
      CHECK(cols[3] == "6");
      CHECK(cols[4] == "96");
    }
    if (S >= 2 && U >= 2) {
      CHECK(cols[5] == "Exact");
      CHECK(std::stoi(cols[3]) % 2 == 0);
      CHECK(cols[3] == cols[4]);
    }
  }
  CHECK(rows == 100);
  CHECK(saw_14);
}

TEST_CASE("grid SVG has one square per cell") {
  std::string svg = grid_svg(grid(6, 7));
  CHECK(svg.rfind("<svg", 0) == 0);
  size_t rects = 0;
  for (size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos; ++pos) ++rects;
  CHECK(rects == 42);
}

TEST_CASE("survey JSON") {
  SurveyResult s;
  s.trials = 3;
  s.seed = 9;
  s.histogram[{2, 3}] = 2;
  s.histogram[{3, 3}] = 1;
  auto j = nlohmann::json::parse(survey_json(s));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["trials"] == 3);
  CHECK(j["histogram"].size() == 2);
  CHECK(j["histogram"][0]["count"] == 2);
}
