#pragma once

#include <map>
#include <vector>

#include "trig/polynomial.hpp"
#include "trig/semigroup.hpp"

namespace trig {

// Sparse polynomial in u_1..u_n: exponent vector -> coefficient.
struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, cplx> terms;

  static MultiPoly constant(int nvars, cplx c);
  static MultiPoly variable(int nvars, int i);
  cplx eval(const std::vector<cplx>& u) const;
  // Largest and smallest weighted degree among nonzero terms.
  int max_weight(const std::vector<int>& w) const;
  int min_weight(const std::vector<int>& w) const;
  void prune(double tol = 1e-14);
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(cplx s, const MultiPoly& a);

// Schur function s_Lambda by Jacobi-Trudi, det(h_{Lambda_i - i + j}), where the complete
// symmetric functions come from exp(sum_k T_k t^k), with T_{Lambda_i + g - i} = u_i and every
// other T_k = 0.
MultiPoly schur_polynomial(const YoungDiagram& y);

}  // namespace trig
