#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "trig/verify.hpp"

using namespace trig;
using nlohmann::json;

TEST_CASE("config: malformed curve files are rejected") {
  const char* bad[] = {
      R"([1, 2])",
      R"({"r": 1, "branch_points": [[0,0],[1,0],[2,0]]})",
      R"({"r": 1.5, "s": 2, "branch_points": [[0,0],[1,0],[2,0]]})",
      R"({"r": 1, "s": 2, "branch_points": [[0,0],[1,0]]})",
      R"({"r": 1, "s": 2, "branch_points": [[0,0],[1,0],[2]]})",
      R"({"r": 1, "s": 2, "branch_points": [[0,0],[1,0],["a",0]]})",
      R"({"r": 1, "s": 2, "branch_points": {"a": 1}})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(parse_curve_config(json::parse(text)), ConfigError);
  CHECK_THROWS_AS(load_curve_config("/nonexistent/curve.json"), ConfigError);

  const auto path = std::filesystem::temp_directory_path() / "trig_malformed_curve.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_curve_config(path.string()), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("config: round trip through JSON") {
  const CurveConfig c{2, 3, {{1.12, 0.27}, {-0.35, 0.94}, {-1.41, -0.22}, {0.18, -1.36}, {0.71, -0.63}}};
  const CurveConfig d = parse_curve_config(json::parse(to_json(c).dump()));
  CHECK(d.r == c.r);
  CHECK(d.s == c.s);
  CHECK(d.branch_points == c.branch_points);
  VecC v(2);
  v << cplx(1.0, -2.0), cplx(0.5, 0.25);
  CHECK(parse_complex_vector(to_json(v)) == v);
}

TEST_CASE("config: random branch points respect the annulus and separation") {
  std::mt19937_64 rng(81);
  const auto b = random_branch_points(7, rng, 0.3);
  CHECK(b.size() == 7);
  for (size_t i = 0; i < b.size(); ++i) {
    CHECK(std::abs(b[i]) >= 0.5);
    CHECK(std::abs(b[i]) <= 2.0);
    for (size_t j = 0; j < i; ++j) CHECK(std::abs(b[i] - b[j]) >= 0.3);
  }
}

TEST_CASE("verify: runs are reproducible and groups are validated") {
  const CurveSetup s = build_setup(CurveConfig{1, 2, {{0.83, 0.41}, {-0.62, 1.17}, {-1.05, -0.58}}}, 3);
  CHECK_THROWS_AS(run_checks(s, "bogus", 1e-6, 3), std::invalid_argument);
  const auto a = run_checks(s, "all", 1e-6, 3);
  const auto b = run_checks(s, "all", 1e-6, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].max_residual == b[i].max_residual);
    CHECK(a[i].pass);
  }
  // A single group reproduces its part of the full run.
  const auto omega = run_checks(s, "omega", 1e-6, 3);
  REQUIRE(omega.size() == 3);
  for (size_t i = 0; i < omega.size(); ++i) CHECK(omega[i].max_residual == a[i].max_residual);
  const json j = to_json(a.front(), CurveConfig{1, 2, {{0.83, 0.41}, {-0.62, 1.17}, {-1.05, -0.58}}});
  for (const char* key : {"check", "name", "curve", "samples", "max_residual", "target", "pass"}) CHECK(j.contains(key));
}
