#pragma once

#include <functional>
#include <vector>

#include "trig/basis.hpp"
#include "trig/quadrature.hpp"

namespace trig {

// Sigma(P, Q) dx_P: simple pole at P = Q (residue 1) and at infinity, zero at the other two
// points over x_Q. Coefficient of dx_P.
cplx sigma_kernel(const CurveModel& c, const CurvePoint& P, const CurvePoint& Q);
// d/dx_Q Sigma(P, Q).
cplx sigma_kernel_dQ(const CurveModel& c, const CurvePoint& P, const CurvePoint& Q);

// D^(+) and D^(-) of the second-kind construction, as coefficient arrays c[a][b] of x_P^a x_Q^b.
struct DPolynomials {
  BiPoly plus;
  BiPoly minus;
};
DPolynomials build_d_polynomials(const CurveModel& c);
// Representatives read off column-wise from D^(+-) (kept for comparison; they do not satisfy
// the exchange identity, see second_kind_basis).
std::vector<Differential> second_kind_from_d(const CurveModel& c);

// [(k(x_Q) - k(x_P))/(x_Q - x_P) - k'(x_Q)] / (x_Q - x_P), with x = x_P, z = x_Q.
BiPoly kernel_identity_lhs(const CurveModel& c);
// -sum_{j,i} (i+1) lambda_j x_P^(r+s-j-i-2) x_Q^i, lambda_j the coefficient of x^(r+s-j) in k.
BiPoly kernel_identity_rhs(const CurveModel& c);

// 3 G(x, z) with G = [k(z) - k(x) + (x - z)(A(z) + C(x))]/(x - z)^2, where
// A = (2 k_r' k_s + k_r k_s')/3 and C = (2 k_s' k_r + k_r' k_s)/3; an exact polynomial.
BiPoly second_kind_kernel(const CurveModel& c);

// nu^II read off from second_kind_kernel, before normalisation.
std::vector<Differential> second_kind_raw(const CurveModel& c);

// nu^II_1..nu^II_g satisfying
//   d_Q Sigma(P,Q) - d_P Sigma(Q,P) = sum_i nu^I_i(Q) nu^II_i(P) - nu^I_i(P) nu^II_i(Q),
// normalised by a symmetric nu^I correction so that 3 y_r y_s nu^II_g / dx = phi-hat_g.
std::vector<Differential> second_kind_basis(const CurveModel& c);

// Bundles the curve with both bases; evaluators are pure.
class FormSet {
 public:
  explicit FormSet(CurveModel c);

  const CurveModel& curve() const { return c_; }
  const std::vector<Differential>& first() const { return first_; }
  const std::vector<Differential>& second() const { return second_; }
  const std::vector<Monomial>& numerators() const { return numerators_; }
  int genus() const { return c_.genus(); }

  // Both sides of the exchange identity at (P, Q).
  cplx exchange_lhs(const CurvePoint& P, const CurvePoint& Q) const;
  cplx exchange_rhs(const CurvePoint& P, const CurvePoint& Q) const;

  // Omega(P1, P2) = d_{P2} Sigma(P1, P2) + sum_i nu^I_i(P1) nu^II_i(P2), coefficient of dx1 dx2.
  cplx omega(const CurvePoint& P1, const CurvePoint& P2) const;
  // F = 9 (x1 - x2)^2 y_r1 y_s1 y_r2 y_s2 Omega.
  cplx fundamental_F(const CurvePoint& P1, const CurvePoint& P2) const;

 private:
  CurveModel c_;
  std::vector<Monomial> numerators_;
  std::vector<Differential> first_;
  std::vector<Differential> second_;
};

// Pi^{P2}_{P1}(P) = Sigma(P, P1) - Sigma(P, P2), coefficient of dx_P.
cplx third_kind(const CurveModel& c, const CurvePoint& P, const CurvePoint& P1, const CurvePoint& P2);

using PointFunction = std::function<cplx(const CurvePoint&)>;

// (1/2 pi i) * loop integral of f dx around the affine non-branch point `at`, on its sheet.
// Radius 1e-3 of the distance to the nearest other singular x; trapezoid rule from 64 nodes,
// doubled until two estimates agree to 1e-10.
cplx loop_residue(const CurveModel& c, const PointFunction& f, const CurvePoint& at,
                  const std::vector<cplx>& other_singular_x);
// Residue at infinity: the local parameter circles once while x circles three times clockwise.
cplx infinity_residue(const CurveModel& c, const PointFunction& f, double radius);

// Omega^{P1,P2}_{Q1,Q2}: P runs from P2 along the straight segment to x = xP1 (P1 is the
// continued endpoint), Q likewise from Q2 to xQ1. The segments must be disjoint and avoid
// branch points. Uses the split: int_P (Sigma(P,Q1) - Sigma(P,Q2)) + sum_i int nu^I_i int nu^II_i.
cplx omega_double_integral(const FormSet& f, const CurvePoint& P2, cplx xP1, const CurvePoint& Q2, cplx xQ1);

// Integrals of the given differentials along the straight segment from P to x (continued).
VecC segment_integrals(const CurveModel& c, const std::vector<Differential>& forms, const CurvePoint& P, cplx x);

}  // namespace trig
