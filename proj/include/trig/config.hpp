#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "trig/inversion.hpp"

namespace trig {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"r": int, "s": int, "branch_points": [[re, im], ...]}
struct CurveConfig {
  int r = 0;
  int s = 0;
  std::vector<cplx> branch_points;
};

CurveConfig parse_curve_config(const nlohmann::json& j);
CurveConfig load_curve_config(const std::string& path);
nlohmann::json to_json(const CurveConfig& c);

// r + s points in the annulus 0.5 <= |z| <= 2, pairwise at least `separation` apart.
std::vector<cplx> random_branch_points(int count, std::mt19937_64& rng, double separation = 0.2);

// Complex numbers as [re, im]; matrices row-major.
nlohmann::json to_json(cplx z);
nlohmann::json to_json(const VecC& v);
nlohmann::json to_json(const MatC& m);
VecC parse_complex_vector(const nlohmann::json& j);

// Everything downstream of a curve: forms, periods with the characteristic, and a sigma
// evaluator whose constant is calibrated on the Schur term at -shift.
struct CurveSetup {
  std::unique_ptr<FormSet> forms;
  PeriodData periods;
  std::unique_ptr<SigmaEvaluator> sigma;
  YoungDiagram diagram;
  MultiPoly schur;
  std::vector<int> weights;
  double calibration_lower = 0.0;  // see SigmaEvaluator::calibrate
};

CurveSetup build_setup(const CurveConfig& cfg, std::uint64_t seed);

}  // namespace trig
