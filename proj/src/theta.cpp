#include "trig/theta.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace trig {

ThetaSeries::ThetaSeries(MatC tau, Eigen::VectorXd top, Eigen::VectorXd bottom, MatC A)
    : tau_(std::move(tau)), top_(std::move(top)), bottom_(std::move(bottom)), A_(std::move(A)) {
  const int g = dim();
  im_ = 0.5 * (tau_.imag() + tau_.imag().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(im_);
  const double lam = es.eigenvalues().minCoeff();
  if (!(lam > 0.0)) throw std::domain_error("ThetaSeries: Im tau is not positive definite");
  im_inv_ = im_.inverse();
  // Terms with pi (n-c)^T Im tau (n-c) > cutoff are below e^-cutoff of the largest one;
  // 48 leaves room for polynomial derivative weights at a 1e-14 target.
  cutoff_ = 48.0;
  radius_ = static_cast<int>(std::ceil(std::sqrt(cutoff_ / (kPi * lam)))) + 1;
  if (top_.size() != g || bottom_.size() != g || A_.rows() != g || A_.cols() != g)
    throw std::invalid_argument("ThetaSeries: dimension mismatch");
}

void ThetaSeries::set_characteristic(Eigen::VectorXd top, Eigen::VectorXd bottom) {
  top_ = std::move(top);
  bottom_ = std::move(bottom);
}

std::vector<cplx> ThetaSeries::sum(const VecC& z, const std::vector<std::vector<int>>& tuples, bool with_A,
                                   double* log_scale, double* abs_sum) const {
  const int g = dim();
  // Real part of the exponent is -pi (n-c)^T Y (n-c) + const with c = -Y^-1 Im z.
  const Eigen::VectorXd c = -im_inv_ * z.imag();
  Eigen::VectorXi n0(g);
  for (int i = 0; i < g; ++i) n0[i] = static_cast<int>(std::lround(c[i] - top_[i]));
  const VecC zb = z + bottom_.cast<cplx>();
  const MatC At = A_.transpose();

  std::vector<cplx> acc(tuples.size(), cplx(0.0));
  double abs_acc = 0.0;
  double e0 = 0.0;
  bool have_e0 = false;
  Eigen::VectorXi m = Eigen::VectorXi::Constant(g, -radius_);
  const long total = static_cast<long>(std::pow(2 * radius_ + 1, g));
  for (long idx = 0; idx < total; ++idx) {
    if (idx > 0) {
      int k = 0;
      while (++m[k] > radius_) {
        m[k] = -radius_;
        ++k;
      }
    }
    const Eigen::VectorXd n = (n0 + m).cast<double>() + top_;
    const Eigen::VectorXd dn = n - c;
    if (kPi * dn.dot(im_ * dn) > cutoff_) continue;
    const VecC nc = n.cast<cplx>();
    const cplx E = kI * kPi * (nc.dot(tau_ * nc) + 2.0 * nc.dot(zb));
    // Eigen's dot conjugates the first argument; n is real so this is the bilinear form.
    if (!have_e0) {
      // Largest possible real part: the quadratic form vanishes at c.
      e0 = E.real() + kPi * dn.dot(im_ * dn);
      have_e0 = true;
    }
    const cplx term = std::exp(E - e0);
    abs_acc += std::abs(term);
    VecC w;
    if (with_A) w = 2.0 * kPi * kI * (At * nc);
    for (size_t t = 0; t < tuples.size(); ++t) {
      cplx f = term;
      for (int i : tuples[t]) f *= w[i];
      acc[t] += f;
    }
  }
  if (log_scale) *log_scale = e0;
  if (abs_sum) *abs_sum = abs_acc;
  return acc;
}

std::vector<cplx> ThetaSeries::partials(const VecC& u, const std::vector<std::vector<int>>& tuples,
                                        double* log_scale, double* abs_sum) const {
  return sum(A_ * u, tuples, true, log_scale, abs_sum);
}

cplx ThetaSeries::value_at_z(const VecC& z, double* log_scale, double* abs_sum) const {
  return sum(z, {{}}, false, log_scale, abs_sum)[0];
}

}  // namespace trig
