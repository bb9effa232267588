#pragma once

#include <vector>

#include "trig/curve.hpp"

namespace trig {

// x^a y_rhat^e1 y_shat^e2 with e1, e2 in {0, 1}; weight is the pole order at infinity.
struct Monomial {
  int a = 0;
  int e1 = 0;
  int e2 = 0;
  int weight = 0;

  bool operator==(const Monomial& o) const { return a == o.a && e1 == o.e1 && e2 == o.e2; }
};

cplx eval_monomial(const Monomial& m, const CurvePoint& p);
Laurent monomial_series(const Monomial& m, const LocalExpansion& e);

// First `count` elements of R ordered by pole order (1, x, y_r, y_s, ... by weight).
std::vector<Monomial> phi_basis(const CurveModel& c, int count);
// First `count` elements of R-hat (divisible by y_r or y_s) ordered by pole order.
std::vector<Monomial> phi_hat_basis(const CurveModel& c, int count);

// A differential (A(x)/y_rhat + B(x)/y_shat) dx / 3.
struct Differential {
  Poly A;
  Poly B;

  // Coefficient of dx at an affine non-branch point.
  cplx eval(const CurvePoint& p) const;
  // Coefficient of dt in the given local expansion.
  Laurent series(const LocalExpansion& e) const;
};

// nu^I_i = phi-hat_{i-1} dx / (3 y_r y_s), i = 1..g.
struct HolomorphicBasis {
  std::vector<Monomial> numerators;  // phi-hat_0 .. phi-hat_{g-1}
  std::vector<Differential> forms;
  int g_r = 0;  // floor((shat - 1)/3): count of x^c y_rhat numerators
  int g_s = 0;  // floor((rhat - 1)/3): count of x^d y_shat numerators
};

HolomorphicBasis holomorphic_basis(const CurveModel& c);

// Weight of u_i, i = 1..g: Lambda_i + g - i (the gaps in decreasing order).
std::vector<int> u_weights(const CurveModel& c);

// A divisor as (point, multiplicity) pairs; infinity appears as a CurvePoint with infinity set.
struct DivisorTerm {
  CurvePoint point;
  int multiplicity = 0;
};

// Divisor of nu^I_{index+1}, computed from local orders at the branch points and at infinity;
// the remaining zeros are reported as affine roots of the numerator polynomial.
std::vector<DivisorTerm> holomorphic_divisor(const CurveModel& c, int index);
int divisor_degree(const std::vector<DivisorTerm>& d);

}  // namespace trig
