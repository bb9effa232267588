#pragma once

#include <vector>

#include "trig/quadrature.hpp"

namespace trig {

// theta[top; bottom](z, tau) = sum_n exp(pi i [(n+top)^T tau (n+top) + 2 (n+top)^T (z+bottom)]).
// Derivatives are taken in u-coordinates where z = A u: each d/du_i brings down
// 2 pi i (A^T (n+top))_i.
class ThetaSeries {
 public:
  ThetaSeries(MatC tau, Eigen::VectorXd top, Eigen::VectorXd bottom, MatC A);

  int dim() const { return static_cast<int>(tau_.rows()); }
  const MatC& tau() const { return tau_; }
  const Eigen::VectorXd& top() const { return top_; }
  const Eigen::VectorXd& bottom() const { return bottom_; }
  void set_characteristic(Eigen::VectorXd top, Eigen::VectorXd bottom);

  // For each index tuple T, returns exp(-log_scale) * d^T theta(A u)/du_T; an empty tuple is
  // theta itself. `abs_sum` receives exp(-log_scale) * sum |term| (the scale for relative checks).
  std::vector<cplx> partials(const VecC& u, const std::vector<std::vector<int>>& tuples, double* log_scale,
                             double* abs_sum = nullptr) const;
  // Plain value at z (no A): exp(log_scale) * returned value.
  cplx value_at_z(const VecC& z, double* log_scale, double* abs_sum = nullptr) const;

 private:
  std::vector<cplx> sum(const VecC& z, const std::vector<std::vector<int>>& tuples, bool with_A, double* log_scale,
                        double* abs_sum) const;

  MatC tau_;
  Eigen::MatrixXd im_;
  Eigen::MatrixXd im_inv_;
  Eigen::VectorXd top_, bottom_;
  MatC A_;
  int radius_ = 0;
  double cutoff_ = 0.0;
};

}  // namespace trig
