#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "coneval/errors.hpp"
#include "coneval/harness.hpp"
#include "coneval/json_io.hpp"
#include "doctest.h"

using namespace coneval;
using nlohmann::json;

#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must be defined by the build"
#endif

namespace {

std::string golden_path(const std::string& name) {
  return std::string(GOLDEN_DIR) + "/" + name;
}

// Compares `actual` against a stored golden file, recording it on first run.
void check_golden(const std::string& name, const std::string& actual) {
  std::string path = golden_path(name);
  std::ifstream in(path);
  if (!in) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << actual;
    return;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == actual);
}

}  // namespace

TEST_CASE("random points are bounded and deterministic") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    QVector p = random_point(3, 1, s);
    for (int i = 0; i < 3; ++i) {
      CHECK(p[i].is_integer());
      CHECK(p[i].abs() <= Rational(1));
    }
    CHECK(random_point(3, 1, s) == p);
  }
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    seen.insert(vector_to_json(random_point(4, 8, s)).dump());
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("random cone generation is reproducible per mode") {
  GeneratorProfile profile;
  profile.dim = 2;
  profile.mode = GenMode::PointedFull;
  profile.seed = 2026;
  Cone c = random_cone(profile);
  CHECK(c.is_pointed());
  CHECK(c.is_full_dim());
  CHECK(random_cone(profile) == c);
  check_golden("pointed_full_dim2.json", cone_to_json(c).dump(2) + "\n");

  profile.mode = GenMode::ZeroCone;
  CHECK(random_cone(profile) == Cone::zero_cone(2));
  profile.mode = GenMode::FullSpace;
  CHECK(random_cone(profile) == Cone::whole_space(2));
  profile.mode = GenMode::Subspace;
  CHECK(random_cone(profile).is_subspace());
  profile.mode = GenMode::WithLineality;
  CHECK(random_cone(profile).lineality_basis().rows() >= 1);
}

TEST_CASE("generator mode names round trip") {
  for (GenMode m : {GenMode::RandomRays, GenMode::RandomHalfspaces,
                    GenMode::Subspace, GenMode::PointedFull,
                    GenMode::WithLineality, GenMode::ZeroCone,
                    GenMode::FullSpace, GenMode::Mixed}) {
    CHECK(gen_mode_from_string(gen_mode_to_string(m)) == m);
  }
  CHECK(gen_mode_to_string(GenMode::PointedFull) == "pointed-full");
  CHECK_THROWS_AS(gen_mode_from_string("bogus"), UsageError);
}

TEST_CASE("degenerate catalog covers the standard cones") {
  for (int dim = 1; dim <= 4; ++dim) {
    std::vector<Cone> cat = degenerate_catalog(dim);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(cat[i].ambient_dim() == dim);
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        CHECK(!(cat[i] == cat[j]));
      }
    }
    auto has = [&cat](const Cone& c) {
      for (const auto& e : cat) {
        if (e == c) return true;
      }
      return false;
    };
    CHECK(has(Cone::zero_cone(dim)));
    CHECK(has(Cone::whole_space(dim)));
    bool pointed_full = false;
    bool with_lineality = false;
    for (const auto& e : cat) {
      if (e.is_pointed() && e.is_full_dim() && !e.is_subspace()) {
        pointed_full = true;
      }
      if (e.lineality_basis().rows() > 0 && !e.is_subspace()) {
        with_lineality = true;
      }
    }
    CHECK(pointed_full);
    if (dim >= 2) CHECK(with_lineality);
  }
}

TEST_CASE("shrinking keeps the failure and removes clutter") {
  QVector e1{Rational(1), Rational(0)};
  Cone start = Cone::from_vrep(
      2,
      {e1, QVector{Rational(3), Rational(1)}, QVector{Rational(2), Rational(5)},
       QVector{Rational(0), Rational(1)}},
      {});
  auto contains_e1 = [&e1](const Cone& c) { return c.contains(e1); };
  Cone small = shrink_cone(start, contains_e1);
  CHECK(contains_e1(small));
  CHECK(small.rays().size() <= 1);

  auto full_dim = [](const Cone& c) { return c.is_full_dim(); };
  Cone small2 = shrink_cone(start, full_dim);
  CHECK(full_dim(small2));
  CHECK(small2.rays().size() + small2.lineality_basis().rows() <= 2);
}

TEST_CASE("reports are deterministic and serializable") {
  GeneratorProfile profile;
  profile.dim = 2;
  profile.seed = 99;
  CheckReport a = run_suite("euler", profile, 5);
  CheckReport b = run_suite("euler", profile, 5);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(a.passed());
  CHECK(a.suite == "euler");
  CHECK(a.trials == 5);
  CHECK(a.coverage.at("catalog-cones") > 0);
  CHECK(a.coverage.at("random-cones") == 5);

  json j = report_to_json(a);
  CHECK(j["passed"] == true);
  CHECK(j["failures"].empty());
  CHECK(j["profile"]["seed"] == 99);

  profile.seed = 100;
  CheckReport c = run_suite("euler", profile, 5);
  CHECK(report_to_json(a).dump() != report_to_json(c).dump());
}

TEST_CASE("every suite passes a short run") {
  GeneratorProfile profile;
  profile.dim = 2;
  profile.seed = 7;
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    CheckReport r = run_suite(name, profile, 2);
    if (!r.passed()) {
      MESSAGE(report_to_json(r)["failures"].dump(2));
    }
    CHECK(r.passed());
  }
}

TEST_CASE("the aggregate suite combines every report") {
  GeneratorProfile profile;
  profile.dim = 1;
  profile.seed = 5;
  CheckReport all = run_suite("all", profile, 1);
  CHECK(all.passed());
  CHECK(all.trials == static_cast<int>(suite_names().size()));
  CHECK(all.coverage.count("euler/catalog-cones") == 1);
  CHECK(all.coverage.count("gambound/boundary-points") == 1);
}

TEST_CASE("unknown suites and invalid profiles are rejected") {
  GeneratorProfile profile;
  CHECK_THROWS_AS(run_suite("nope", profile, 1), UsageError);
  profile.dim = 0;
  CHECK_THROWS_AS(run_suite("euler", profile, 1), UsageError);
  profile.dim = 6;
  CHECK_THROWS_AS(run_suite("euler", profile, 1), UsageError);
  profile.dim = 3;
  profile.coord_bound = 9;
  CHECK_THROWS_AS(run_suite("euler", profile, 1), UsageError);
  profile.coord_bound = 4;
  CHECK_THROWS_AS(run_suite("euler", profile, -1), UsageError);
}

TEST_CASE("ball boundary cases are exercised") {
  GeneratorProfile profile;
  profile.dim = 2;
  profile.seed = 11;
  CheckReport r = run_suite("gambound", profile, 10);
  CHECK(r.passed());
  CHECK(r.coverage.at("boundary-points") >= 1);
}

TEST_CASE("planted evaluation bugs are caught") {
  GeneratorProfile profile;
  profile.dim = 2;
  profile.seed = 3;

  FaultInjection flip;
  flip.flip_face_sign = true;
  CheckReport r1 = run_suite("main-cut", profile, 100, flip);
  CHECK(!r1.passed());
  REQUIRE(!r1.failures.empty());
  CHECK(r1.failures[0].details.contains("cone"));
  CHECK(r1.failures[0].details.contains("inputs"));
  // The witness replays: parse the cone back and re-evaluate.
  Cone witness = cone_from_json(r1.failures[0].details["cone"]);
  CHECK(witness.ambient_dim() >= 1);

  CheckReport r2 = run_suite("planar-region", profile, 100, flip);
  CHECK(!r2.passed());

  FaultInjection drop;
  drop.drop_cut_slice = true;
  CheckReport r3 = run_suite("main-cut", profile, 100, drop);
  CHECK(!r3.passed());
  REQUIRE(!r3.failures.empty());
  CHECK(r3.failures[0].check == "cut-additivity");
}
