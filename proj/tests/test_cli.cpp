#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sys/wait.h>

#include "equilib/io.hpp"

using namespace equilib;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "equilib_cli_test";
  fs::create_directories(d);
  return d;
}

int run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(EQUILIB_BIN) + " " + args + " > " + (scratch() / "stdout").string() +
                    " 2> " + (scratch() / "stderr").string();
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string out() { return read_file((scratch() / "stdout").string()); }

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("analyze writes a report for the (2,2) tetrahedron") {
  std::string json = (scratch() / "r.json").string();
  REQUIRE(run("analyze " + fixture("tetra_22.off") + " --json " + json) == 0);
  auto j = nlohmann::json::parse(read_file(json));
  CHECK(j["equilibrium"]["S"] == 2);
  CHECK(j["equilibrium"]["U"] == 2);
  CHECK(j["equilibrium"]["H"] == 2);
  CHECK(j["complexity"] == 8);
  CHECK(j["input_sha256"] == sha256_hex(read_file(fixture("tetra_22.off"))));
}

TEST_CASE("degenerate equilibria exit with 2") {
  std::string off = (scratch() / "deg.off").string();
  write_file(off, "OFF\n4 4 6\n0 0 0\n4 0 0\n0 4 0\n3 3 4\n3 0 1 2\n3 0 1 3\n3 1 2 3\n3 0 2 3\n");
  CHECK(run("analyze " + off + " --ref 2,2,1/10") == 2);
  CHECK(out().find("degenerate") != std::string::npos);
  CHECK(run("analyze " + off) == 0);
}

TEST_CASE("failures exit with 1") {
  CHECK(run("analyze /nonexistent.off") == 1);
  CHECK(run("construct --class 1,2") == 1);
  CHECK(run("conway --m 5") == 1);
  CHECK(run("frobnicate") == 1);
}

TEST_CASE("construct then analyze is a fixed point") {
  std::string off = (scratch() / "c65.off").string(), recipe = (scratch() / "c65.recipe").string();
  REQUIRE(run("construct --class 6,5 --out " + off + " --recipe " + recipe) == 0);
  REQUIRE(run("analyze " + off) == 0);
  CHECK(out().find("(S,U,H) = (6,5,9)") != std::string::npos);
  CHECK(out().find("C = 0") != std::string::npos);
  std::string again = (scratch() / "c65b.off").string();
  REQUIRE(run("replay " + recipe + " --out " + again) == 0);
  CHECK(read_file(again) == read_file(off));
}

TEST_CASE("grid writes the chart data") {
  std::string csv = (scratch() / "g.csv").string(), svg = (scratch() / "g.svg").string();
  REQUIRE(run("grid --max 10,10 --csv " + csv + " --svg " + svg) == 0);
  std::string text = read_file(csv);
  CHECK(text.find("\n1,4,0,6,96,") != std::string::npos);
  CHECK(read_file(svg).find("<svg") == 0);
}

TEST_CASE("polar and monostatic solids") {
  REQUIRE(run("polar " + fixture("midscribed_cube.off") + " --ref 0,0,0") == 0);
  std::string dual = (scratch() / "dual.off").string();
  write_file(dual, out());
  REQUIRE(run("analyze " + dual) == 0);
  CHECK(out().find("(f,v,e) = (8,6,12)") != std::string::npos);

  REQUIRE(run("conway") == 0);
  std::string conway = (scratch() / "conway.off").string();
  write_file(conway, out());
  REQUIRE(run("analyze " + conway) == 0);
  CHECK(out().find("(S,U,H) = (1,4,3)") != std::string::npos);

  REQUIRE(run("mono-pyramid --asym") == 0);
  std::string mono = (scratch() / "mono.off").string();
  write_file(mono, out());
  REQUIRE(run("analyze " + mono) == 0);
  CHECK(out().find("(S,U,H) = (2,1,1)") != std::string::npos);
}

TEST_CASE("survey honours the seed and EQUILIB_SEED") {
  REQUIRE(run("survey --tetra --trials 200 --seed 5") == 0);
  auto a = nlohmann::json::parse(out());
  CHECK(a["seed"] == 5);
  CHECK(a["trials"] == 200);
  REQUIRE(run("survey --tetra --trials 200", "EQUILIB_SEED=5") == 0);
  auto b = nlohmann::json::parse(out());
  CHECK(b["histogram"] == a["histogram"]);
  REQUIRE(run("survey --tetra --trials 200", "EQUILIB_SEED=6") == 0);
  CHECK(nlohmann::json::parse(out())["seed"] == 6);
}
