#pragma once

#include <string>
#include <vector>

#include "trig/config.hpp"

namespace trig {

// One verified property: the largest residual over its samples against its target.
struct CheckResult {
  std::string check;  // group: omega, legendre, schur, inversion, vanishing
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double target = 0.0;
  bool pass = false;
};

nlohmann::json to_json(const CheckResult& r, const CurveConfig& cfg);

const std::vector<std::string>& check_groups();

// Runs one group (or "all"). `precision` is the residual target for exact identities; the
// finite-difference checks (Omega diagonal, vector field) use max(precision, 1e-6) and the Schur
// scaling limit its own bound 10 eps at eps = 1e-2. Throws std::invalid_argument for an unknown group.
std::vector<CheckResult> run_checks(const CurveSetup& setup, const std::string& which, double precision,
                                    std::uint64_t seed);

// (x_Q - x_P)^2 Omega(P, Q) - 1 at |x_Q - x_P| = h along a fixed direction on the sheet of P.
double omega_diagonal_residual(const FormSet& f, const CurvePoint& P, double h);

// Lattice-coordinate residual of w(sum_j e_j B_j), the Abel image of the divisor of y_rhat.
double principal_divisor_residual(const FormSet& f, const PeriodData& pd);

}  // namespace trig
