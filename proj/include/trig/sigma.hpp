#pragma once

#include <vector>

#include "trig/periods.hpp"
#include "trig/schur.hpp"
#include "trig/theta.hpp"

namespace trig {

// sigma(u) = c exp(-1/2 u^T kappa u) theta[delta]((2 omega')^-1 u, tau), kappa = eta' omega'^-1.
// All derivatives are analytic: theta partials come from the lattice sum, the Gaussian
// prefactor's from its polynomial recursion, combined by Leibniz.
class SigmaEvaluator {
 public:
  // Needs a PeriodData whose characteristic has been found.
  explicit SigmaEvaluator(const PeriodData& pd);

  int genus() const { return g_; }
  const PeriodData& periods() const { return pd_; }
  const MatC& kappa() const { return kappa_; }
  cplx constant() const { return c_; }
  void set_constant(cplx c) { c_ = c; }

  cplx sigma(const VecC& u) const;
  // Partials for several index tuples (0-based indices) at one point; {} is sigma itself.
  std::vector<cplx> partials(const std::vector<std::vector<int>>& tuples, const VecC& u) const;
  cplx partial(const std::vector<int>& idx, const VecC& u) const { return partials({idx}, u)[0]; }
  VecC gradient(const VecC& u) const;
  // wp_ij = -d^2 log sigma / du_i du_j. Throws when sigma(u) vanishes relative to its scale.
  MatC wp(const VecC& u) const;
  // |sigma(u)| over the same expression with |theta| replaced by its sum of absolute terms.
  double relative_magnitude(const VecC& u) const;

  // l = 2 omega' l1 + 2 omega'' l2.
  VecC lattice_vector(const Eigen::VectorXi& l1, const Eigen::VectorXi& l2) const;
  // L(u, l) = 2 u^T (eta' l1 + eta'' l2).
  cplx L(const VecC& u, const Eigen::VectorXi& l1, const Eigen::VectorXi& l2) const;
  // chi(l) = exp(pi i (2 l1.delta'' - 2 l2.delta' + l1.l2)).
  cplx chi(const Eigen::VectorXi& l1, const Eigen::VectorXi& l2) const;
  // |sigma(u+l) - sigma(u) exp(sign * L(u + l/2, l)) chi(l)| / |sigma(u+l)|.
  double quasi_periodicity_residual(const VecC& u, const Eigen::VectorXi& l1, const Eigen::VectorXi& l2,
                                    int sign = -1) const;

  // Fixes c so that the weight-|Lambda| Taylor coefficient of z -> sigma(center + z^wt o v)
  // equals S_Lambda(v). Returns the largest lower-order coefficient relative to the matched one.
  double calibrate(const MultiPoly& schur, const std::vector<int>& weights, int size, const VecC& center);

  // max over samples |u| <= 1 of |sigma(center + eps^wt o u)/eps^|Lambda| - S_Lambda(u)|.
  double scaling_limit_error(const MultiPoly& schur, const std::vector<int>& weights, int size, const VecC& center,
                             double eps, int samples, std::uint64_t seed) const;

 private:
  // Returns log of the common scale; `vals` receives the scaled partials.
  cplx scaled_partials(const std::vector<std::vector<int>>& tuples, const VecC& u, std::vector<cplx>& vals,
                       double* abs_sum = nullptr) const;

  PeriodData pd_;
  int g_ = 0;
  MatC kappa_, kappa_sym_, A_;
  ThetaSeries theta_;
  cplx c_{1.0};
};

}  // namespace trig
