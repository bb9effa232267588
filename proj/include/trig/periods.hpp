#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "trig/forms.hpp"
#include "trig/theta.hpp"

namespace trig {

// Permutation of the three lifts (indexed as in lift_x(base)) after continuation along the
// closed polygon base -> vertices... -> base.
std::array<int, 3> monodromy_polygon(const CurveModel& c, cplx base, const std::vector<cplx>& vertices);
// Keyhole loop from `base` around b_j counter-clockwise.
std::array<int, 3> monodromy_branch(const CurveModel& c, int j, cplx base);

// Elementary cycle (edge k, sheet l): from b_p0 to b_p1 on sheet l, back on sheet l+1.
// Branch points are chained in (Re, Im) order.
struct HomologyBasis {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> cycles;  // (edge, sheet), sheet in {0, 1}
  Eigen::MatrixXi intersection;             // among elementary cycles
  Eigen::MatrixXi a_cycles;                 // g x 2g integer combinations
  Eigen::MatrixXi b_cycles;
};

HomologyBasis homology_basis(const CurveModel& c);
// Integer symplectic Gram-Schmidt: rows of (A, B) satisfy A K A^T = B K B^T = 0, A K B^T = I.
std::pair<Eigen::MatrixXi, Eigen::MatrixXi> symplectic_reduce(const Eigen::MatrixXi& K);

// Integrals of `forms` over the elementary cycles: rows forms, columns cycles.
MatC elementary_periods(const CurveModel& c, const HomologyBasis& h, const std::vector<Differential>& forms);

struct PeriodData {
  int genus = 0;
  MatC omega1, omega2, eta1, eta2;  // half-periods omega', omega'', eta', eta''
  MatC tau;                         // omega'^-1 omega''
  VecC shift;                       // w-tilde(B_{s+1} + ... + B_{s+r})
  Eigen::VectorXd delta1, delta2;   // delta' (theta bottom), delta'' (theta top)
  bool has_characteristic = false;
  HomologyBasis homology;

  // Lattice generators [2 omega', 2 omega''] (g x 2g).
  MatC lattice() const;
  // M = [[2w', 2w''], [2e', 2e'']] and || M J M^T - 2 pi i J ||_inf with J = [[0, -I], [I, 0]].
  double legendre_residual() const;
  // ||tau - tau^T||_inf and the smallest eigenvalue of Im tau.
  double tau_asymmetry() const;
  double min_eig_im_tau() const;
};

// Periods of nu^I and nu^II and the Abel shift; the characteristic is left unset.
PeriodData period_matrices(const FormSet& f);

// w-tilde(P) = int_infinity^P of the given differentials, along a ray to infinity.
VecC abel_integrals(const CurveModel& c, const std::vector<Differential>& forms, const CurvePoint& P);
VecC abel_point(const FormSet& f, const CurvePoint& P);
VecC abel_map(const FormSet& f, const std::vector<CurvePoint>& divisor);
VecC shifted_abel_map(const FormSet& f, const PeriodData& pd, const std::vector<CurvePoint>& points);

// Real coordinates m with lattice() * m = v, and the distance of m to the nearest integer vector.
Eigen::VectorXd lattice_coordinates(const PeriodData& pd, const VecC& v);
double lattice_residual(const PeriodData& pd, const VecC& v);

// A non-branch point with x uniform in the annulus 0.5 <= |x| <= 2, at least `gap` away from
// every branch point; the sheet is uniform.
CurvePoint random_point(const CurveModel& c, std::mt19937_64& rng, double gap = 0.05);

struct CharacteristicSearch {
  Eigen::VectorXd delta1, delta2;
  int passing = 0;       // candidates below tolerance on every sample
  double best = 0.0;     // worst-sample score of the chosen candidate
  double runner_up = 0.0;
};

// Exhaustive search over the 2^(2g) half-integer characteristics for the one whose theta
// vanishes at (2 omega')^-1 w_s(P_1..P_{g-1}) for `samples` random tuples. Score: |theta| over
// the sum of absolute terms. Throws unless exactly one candidate passes.
CharacteristicSearch find_characteristic(const FormSet& f, PeriodData& pd, std::uint64_t seed, int samples = 20,
                                         double tol = 1e-6);

}  // namespace trig
