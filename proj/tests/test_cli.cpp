#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "coneval/json_io.hpp"
#include "coneval/svg.hpp"
#include "doctest.h"

using namespace coneval;
using nlohmann::json;

#ifndef CLI_BIN
#error "CLI_BIN must be defined by the build"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? std::string(CLI_BIN) : env + " " + CLI_BIN;
  cmd += " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return {WEXITSTATUS(rc), slurp("cli_stdout.txt")};
}

const char* kWedge =
    R"({"dim":2,"vrep":{"rays":[["1","0"],["1","1"]],"lineality":[]}})";
const char* kQuadrant = R"({"dim":2,"hrep":[["1","0"],["0","1"]]})";

Cone wedge() { return cone_from_json(json::parse(kWedge)); }
Cone quadrant() { return cone_from_json(json::parse(kQuadrant)); }

}  // namespace

TEST_CASE("eval prints exact values") {
  spit("wedge.json", kWedge);
  RunResult r1 = run_cli("eval wedge.json --y 2,1 --x 1,1/2");
  CHECK(r1.code == 0);
  CHECK(r1.out == "1\n");
  RunResult r2 = run_cli("eval wedge.json --y 2,1 --x 3,0");
  CHECK(r2.code == 0);
  CHECK(r2.out == "0\n");
  RunResult r3 = run_cli(
      R"(eval '{"dim":2,"vrep":{"rays":[],"lineality":[]}}' --y 5,-3 --x 0,0)");
  CHECK(r3.code == 0);
  CHECK(r3.out == "1\n");

  QVector y{Rational(2), Rational(1)};
  QVector x{Rational(1), Rational(1, 2)};
  RunResult r4 = run_cli("eval wedge.json --y 2,1 --x 1,1/2 --variant gamma-prime");
  CHECK(r4.code == 0);
  CHECK(r4.out == gamma_prime_y_eval(wedge(), y, x).str() + "\n");
}

TEST_CASE("faces and dual match the library output") {
  RunResult faces = run_cli(std::string("faces '") + kQuadrant + "'");
  CHECK(faces.code == 0);
  json jf = json::parse(faces.out);
  CHECK(jf["face_count"] == 4);
  CHECK(jf.dump(2) + "\n" == faces_to_json(quadrant()).dump(2) + "\n");

  RunResult dual = run_cli(std::string("dual '") + kQuadrant + "'");
  CHECK(dual.code == 0);
  CHECK(dual.out == cone_to_json(quadrant().dual()).dump(2) + "\n");
}

TEST_CASE("angle matches the library for every face") {
  Cone q = quadrant();
  bool saw_halfplane = false;
  for (int i = 0; i < q.face_count(); ++i) {
    RunResult r = run_cli(std::string("angle '") + kQuadrant + "' --face " +
                          std::to_string(i));
    CHECK(r.code == 0);
    CHECK(r.out == cone_to_json(q.angle_cone(i)).dump(2) + "\n");
    const Cone& a = q.angle_cone(i);
    if (a.dim() == 2 && a.lineality_basis().rows() == 1) saw_halfplane = true;
  }
  CHECK(saw_halfplane);

  RunResult bad = run_cli(std::string("angle '") + kQuadrant + "' --face 9");
  CHECK(bad.code == 2);
}

TEST_CASE("region emits the decomposition and the SVG") {
  spit("wedge.json", kWedge);
  RunResult r = run_cli("region wedge.json --y 2,1 --svg cli_region.svg");
  CHECK(r.code == 0);
  CellDecomposition dec = decomposition_from_json(json::parse(r.out));
  CHECK(dec.dim == 2);
  REQUIRE(!dec.cells.empty());
  for (const RegionCell& cell : dec.cells) {
    CHECK(cell.value == Rational(1));
  }

  QVector y{Rational(2), Rational(1)};
  CellDecomposition direct = gamma_region(wedge(), y);
  std::string expected = render_region_svg(wedge(), y, direct, parse_box("4"),
                                           Palette{}, false);
  CHECK(slurp("cli_region.svg") == expected);

  RunResult ball = run_cli(
      "region wedge.json --y 2,1 --svg cli_region_ball.svg --ball --box 3");
  CHECK(ball.code == 0);
  CHECK(slurp("cli_region_ball.svg").find("<ellipse") != std::string::npos);

  RunResult flat = run_cli(
      R"(region '{"dim":3,"vrep":{"rays":[["1","0","0"]],"lineality":[]}}' --y 1,0,0 --svg nope.svg)");
  CHECK(flat.code == 2);
}

TEST_CASE("check runs suites, honors seeds, and writes reports") {
  RunResult r = run_cli(
      "check --suite euler --trials 2 --dim-max 2 --seed 7 --report rpt1.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("euler: pass") == 0);
  json report = json::parse(slurp("rpt1.json"));
  CHECK(report["suite"] == "euler");
  CHECK(report["passed"] == true);
  CHECK(report["profile"]["seed"] == 7);

  // Identical invocations produce byte-identical reports.
  run_cli(
      "check --suite euler --trials 2 --dim-max 2 --seed 7 --report rpt2.json");
  CHECK(slurp("rpt1.json") == slurp("rpt2.json"));

  // The environment variable sets the default seed...
  run_cli("check --suite euler --trials 2 --dim-max 2 --report rpt3.json",
          "CONEVAL_SEED=7");
  CHECK(slurp("rpt1.json") == slurp("rpt3.json"));
  // ...and an explicit flag overrides it.
  run_cli(
      "check --suite euler --trials 2 --dim-max 2 --seed 7 --report rpt4.json",
      "CONEVAL_SEED=99");
  CHECK(slurp("rpt1.json") == slurp("rpt4.json"));

  RunResult unknown = run_cli("check --suite nope --trials 1");
  CHECK(unknown.code == 2);
  RunResult bad_dim = run_cli("check --suite euler --dim-max 9");
  CHECK(bad_dim.code == 2);
}

TEST_CASE("planted faults drive the failure exit code") {
  RunResult r = run_cli(
      "check --suite main-cut --trials 5 --dim-max 2 --seed 3 "
      "--inject-fault drop-cut-slice --report fault.json");
  CHECK(r.code == 1);
  json report = json::parse(slurp("fault.json"));
  CHECK(report["passed"] == false);
  CHECK(!report["failures"].empty());

  RunResult r2 = run_cli(
      "check --suite planar-region --trials 5 --dim-max 2 --seed 3 "
      "--inject-fault flip-face-sign");
  CHECK(r2.code == 1);
}

TEST_CASE("figures are reproducible") {
  RunResult r = run_cli("figures --out-dir .");
  CHECK(r.code == 0);
  CHECK(r.out == "./figure-a.svg\n./figure-b.svg\n");
  std::string fa = slurp("figure-a.svg");
  std::string fb = slurp("figure-b.svg");
  CHECK(fa.find("<svg") == 0);
  CHECK(fb.find("<svg") == 0);
  CHECK(fa != fb);
  CHECK(fa.find("<polygon") != std::string::npos);
  CHECK(fb.find("<polygon") != std::string::npos);

  run_cli("figures --out-dir .");
  CHECK(slurp("figure-a.svg") == fa);
  CHECK(slurp("figure-b.svg") == fb);
}

TEST_CASE("malformed input exits with the usage code") {
  RunResult r1 = run_cli("faces '{oops'");
  CHECK(r1.code == 2);
  CHECK(slurp("cli_stderr.txt").find("error:") != std::string::npos);
  spit("wedge.json", kWedge);
  RunResult r2 = run_cli("eval wedge.json --y 2,1 --x 1");
  CHECK(r2.code == 2);
  RunResult r3 = run_cli("eval wedge.json --y 2,1 --x 1,oops");
  CHECK(r3.code == 2);
  RunResult r4 = run_cli("");
  CHECK(r4.code == 2);
}
