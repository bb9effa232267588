#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trig/polynomial.hpp"
#include "trig/semigroup.hpp"

namespace trig {

// A point of the curve: affine (x, y_rhat, y_shat) or the single point at infinity.
// branch >= 0 marks the ramification point B_{branch+1}, where y_rhat = y_shat = 0.
struct CurvePoint {
  cplx x{0.0};
  cplx yr{0.0};
  cplx ys{0.0};
  bool infinity = false;
  int branch = -1;

  static CurvePoint at_infinity() {
    CurvePoint p;
    p.infinity = true;
    return p;
  }
  bool is_branch() const { return branch >= 0; }
};

// Local expansion of (x, y_rhat, y_shat) in a local parameter t.
struct LocalExpansion {
  Laurent x;
  Laurent yr;
  Laurent ys;
  int order = 0;
};

struct NonsingularityReport {
  bool ok = true;
  int i = -1;  // 1-based indices of the coinciding pair when !ok
  int j = -1;
};

// Distinct branch points are equivalent to the rank condition on the Jacobian matrix.
NonsingularityReport check_nonsingular(const std::vector<cplx>& b, double tol = 1e-12);

// The curve y_rhat^3 = k_r^2 k_s, y_shat^3 = k_s^2 k_r, y_rhat y_shat = k_r k_s, where
// k_s has roots b_1..b_s and k_r has roots b_{s+1}..b_{s+r}.
class CurveModel {
 public:
  CurveModel(int r, int s, std::vector<cplx> branch_points);

  const NumericalSemigroup& semigroup() const { return sg_; }
  int r() const { return sg_.r; }
  int s() const { return sg_.s; }
  int genus() const { return sg_.genus; }
  int r_hat() const { return sg_.r_hat(); }
  int s_hat() const { return sg_.s_hat(); }
  int num_branch() const { return static_cast<int>(b_.size()); }
  const std::vector<cplx>& branch_points() const { return b_; }
  cplx branch_point(int j) const { return b_[j]; }
  // Vanishing order of y_rhat at B_{j+1}: 1 for j < s, 2 otherwise.
  int exponent(int j) const { return j < sg_.s ? 1 : 2; }

  const Poly& k_r() const { return kr_; }
  const Poly& k_s() const { return ks_; }
  const Poly& k() const { return k_; }
  // k_r^2 k_s and k_s^2 k_r.
  const Poly& f_r() const { return fr_; }
  const Poly& f_s() const { return fs_; }

  // Weight of a lambda coefficient: wt(lambda_i) = 3i for the coefficient of x^(deg - i).
  static int lambda_weight(int i) { return 3 * i; }

  // Three lifts (the zeta-orbit) sorted by arg(y_rhat); a branch point gives one point.
  std::vector<CurvePoint> lift_x(cplx x) const;
  // Point over x whose y_rhat is the given (approximate) value; the relations fix y_shat.
  CurvePoint point(cplx x, cplx yr) const;
  // Index of the branch point at x, if any.
  std::optional<int> branch_index(cplx x, double tol = 1e-12) const;

  // Analytic continuation of a non-branch point along the straight segment to x. Exact as
  // long as no branch point lies on the segment: each factor (x - b_j)/(x_P - b_j) then stays
  // off the negative real axis, so principal cube roots are continuous.
  CurvePoint continue_straight(const CurvePoint& p, cplx x) const;

  // (x, y_r, y_s) -> (x, zeta y_r, zeta^2 y_s).
  CurvePoint cyclic_action(const CurvePoint& p) const;

  // Scale-relative residuals of f_{2 rhat}, f_{shat+rhat}, f_{2 shat} at an affine point.
  std::vector<double> relation_residuals(const CurvePoint& p) const;

  // x = t^-3 exactly; y_rhat = t^-rhat (1 + O(t)), y_shat = t^-shat (1 + O(t)).
  LocalExpansion expand_at_infinity(int order) const;
  // Around B_{j+1}: x = b_j + t^3, y_rhat ~ c t^e_j.
  LocalExpansion expand_at_branch(int j, int order) const;
  // Around a non-branch affine point: x = x_P + t, on the sheet of P.
  LocalExpansion expand_at_point(const CurvePoint& p, int order) const;
  // Dispatches on the point type.
  LocalExpansion expand(const CurvePoint& p, int order) const;

  // d y_rhat / dx and d y_shat / dx at a non-branch affine point.
  std::pair<cplx, cplx> dy_dx(const CurvePoint& p) const;

 private:
  NumericalSemigroup sg_;
  std::vector<cplx> b_;
  Poly kr_, ks_, k_, fr_, fs_;
};

}  // namespace trig
