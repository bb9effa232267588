#include "trig/sigma.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace trig {

namespace {

ThetaSeries make_theta(const PeriodData& pd) {
  if (!pd.has_characteristic) throw std::invalid_argument("SigmaEvaluator: characteristic not set");
  return ThetaSeries(pd.tau, pd.delta2, pd.delta1, (2.0 * pd.omega1).inverse());
}

}  // namespace

SigmaEvaluator::SigmaEvaluator(const PeriodData& pd) : pd_(pd), g_(pd.genus), theta_(make_theta(pd)) {
  kappa_ = pd_.eta1 * pd_.omega1.inverse();
  kappa_sym_ = 0.5 * (kappa_ + kappa_.transpose());
  A_ = (2.0 * pd_.omega1).inverse();
}

cplx SigmaEvaluator::scaled_partials(const std::vector<std::vector<int>>& tuples, const VecC& u,
                                     std::vector<cplx>& vals, double* abs_sum) const {
  // q(u) = -1/2 u^T kappa u; grad q = -kappa_sym u; Hessian -kappa_sym.
  const cplx q = -0.5 * u.transpose() * kappa_sym_ * u;
  const VecC gq = -kappa_sym_ * u;
  std::map<std::vector<int>, cplx> gauss;  // d^S e^q / e^q, keyed by sorted S
  std::function<cplx(std::vector<int>)> P = [&](std::vector<int> s) -> cplx {
    std::sort(s.begin(), s.end());
    if (s.empty()) return 1.0;
    auto it = gauss.find(s);
    if (it != gauss.end()) return it->second;
    const int t1 = s[0];
    std::vector<int> rest(s.begin() + 1, s.end());
    cplx v = gq[t1] * P(rest);
    for (size_t k = 0; k < rest.size(); ++k) {
      std::vector<int> r2 = rest;
      r2.erase(r2.begin() + static_cast<long>(k));
      v += -kappa_sym_(t1, rest[k]) * P(r2);
    }
    gauss[s] = v;
    return v;
  };
  // Leibniz over position subsets; collect the theta tuples needed.
  std::map<std::vector<int>, int> theta_index;
  std::vector<std::vector<int>> theta_tuples;
  auto theta_slot = [&](std::vector<int> t) {
    std::sort(t.begin(), t.end());
    auto it = theta_index.find(t);
    if (it != theta_index.end()) return it->second;
    const int k = static_cast<int>(theta_tuples.size());
    theta_index[t] = k;
    theta_tuples.push_back(t);
    return k;
  };
  struct Piece {
    cplx gauss;
    int slot;
  };
  std::vector<std::vector<Piece>> plan(tuples.size());
  for (size_t t = 0; t < tuples.size(); ++t) {
    const auto& T = tuples[t];
    const int n = static_cast<int>(T.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> s, rest;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? s : rest).push_back(T[i]);
      plan[t].push_back({P(s), theta_slot(rest)});
    }
  }
  double e0 = 0.0;
  const std::vector<cplx> th = theta_.partials(u, theta_tuples, &e0, abs_sum);
  vals.assign(tuples.size(), cplx(0.0));
  for (size_t t = 0; t < tuples.size(); ++t)
    for (const Piece& p : plan[t]) vals[t] += p.gauss * th[p.slot];
  return q + e0;
}

std::vector<cplx> SigmaEvaluator::partials(const std::vector<std::vector<int>>& tuples, const VecC& u) const {
  std::vector<cplx> vals;
  const cplx ls = scaled_partials(tuples, u, vals);
  const cplx f = c_ * std::exp(ls);
  for (auto& v : vals) v *= f;
  return vals;
}

cplx SigmaEvaluator::sigma(const VecC& u) const { return partials({{}}, u)[0]; }

VecC SigmaEvaluator::gradient(const VecC& u) const {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < g_; ++i) t.push_back({i});
  const auto v = partials(t, u);
  return Eigen::Map<const VecC>(v.data(), g_);
}

double SigmaEvaluator::relative_magnitude(const VecC& u) const {
  std::vector<cplx> vals;
  double abs_sum = 0.0;
  scaled_partials({{}}, u, vals, &abs_sum);
  return std::abs(vals[0]) / abs_sum;
}

MatC SigmaEvaluator::wp(const VecC& u) const {
  std::vector<std::vector<int>> t{{}};
  for (int i = 0; i < g_; ++i) t.push_back({i});
  for (int i = 0; i < g_; ++i)
    for (int j = i; j < g_; ++j) t.push_back({i, j});
  std::vector<cplx> v;
  double abs_sum = 0.0;
  scaled_partials(t, u, v, &abs_sum);
  // The common scale cancels in the ratio.
  if (std::abs(v[0]) < 1e-12 * abs_sum) throw std::domain_error("wp: sigma vanishes at u (theta divisor)");
  MatC W(g_, g_);
  int k = 1 + g_;
  for (int i = 0; i < g_; ++i)
    for (int j = i; j < g_; ++j, ++k) {
      W(i, j) = (v[1 + i] * v[1 + j] - v[0] * v[k]) / (v[0] * v[0]);
      W(j, i) = W(i, j);
    }
  return W;
}

VecC SigmaEvaluator::lattice_vector(const Eigen::VectorXi& l1, const Eigen::VectorXi& l2) const {
  return 2.0 * pd_.omega1 * l1.cast<cplx>() + 2.0 * pd_.omega2 * l2.cast<cplx>();
}

cplx SigmaEvaluator::L(const VecC& u, const Eigen::VectorXi& l1, const Eigen::VectorXi& l2) const {
  return 2.0 * (u.transpose() * (pd_.eta1 * l1.cast<cplx>() + pd_.eta2 * l2.cast<cplx>()))(0);
}

cplx SigmaEvaluator::chi(const Eigen::VectorXi& l1, const Eigen::VectorXi& l2) const {
  const double a = 2.0 * l1.cast<double>().dot(pd_.delta2) - 2.0 * l2.cast<double>().dot(pd_.delta1) +
                   static_cast<double>(l1.dot(l2));
  return std::exp(kI * kPi * a);
}

double SigmaEvaluator::quasi_periodicity_residual(const VecC& u, const Eigen::VectorXi& l1,
                                                  const Eigen::VectorXi& l2, int sign) const {
  const VecC l = lattice_vector(l1, l2);
  std::vector<cplx> a, b;
  const cplx la = scaled_partials({{}}, u + l, a);
  const cplx lb = scaled_partials({{}}, u, b);
  // Compare in a common scale to avoid overflow of the exponential factors.
  const cplx rhs_log = lb + static_cast<double>(sign) * L(u + 0.5 * l, l1, l2) - la;
  const cplx rhs = b[0] * std::exp(rhs_log) * chi(l1, l2);
  return std::abs(a[0] - rhs) / std::abs(a[0]);
}

double SigmaEvaluator::calibrate(const MultiPoly& schur, const std::vector<int>& weights, int size,
                                 const VecC& center) {
  std::vector<cplx> v(g_);
  for (int i = 0; i < g_; ++i) v[i] = cplx(0.7 + 0.1 * i, 0.3 - 0.05 * i);
  const cplx sv = schur.eval(v);
  if (std::abs(sv) < 1e-8) throw std::logic_error("calibrate: Schur polynomial vanishes at the probe point");
  c_ = 1.0;
  // Taylor coefficients of z -> sigma(center + z^wt o v) by the trapezoid rule on |z| = rho.
  const int n = 128;
  const double rho = 0.3;
  std::vector<cplx> coeff(size + 1, cplx(0.0));
  for (int k = 0; k < n; ++k) {
    const cplx z = rho * std::polar(1.0, 2.0 * kPi * k / n);
    VecC u = center;
    for (int i = 0; i < g_; ++i) u[i] += std::pow(z, weights[i]) * v[i];
    const cplx s = sigma(u);
    for (int m = 0; m <= size; ++m) coeff[m] += s / std::pow(z, m) / static_cast<double>(n);
  }
  const cplx lead = coeff[size];
  if (std::abs(lead) < 1e-300) throw std::logic_error("calibrate: vanishing leading coefficient");
  c_ = sv / lead;
  double lower = 0.0;
  for (int m = 0; m < size; ++m) lower = std::max(lower, std::abs(coeff[m] / lead) * std::pow(rho, m - size));
  return lower;
}

double SigmaEvaluator::scaling_limit_error(const MultiPoly& schur, const std::vector<int>& weights, int size,
                                           const VecC& center, double eps, int samples,
                                           std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N;
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    // Uniform in the unit ball of C^g = R^(2g).
    Eigen::VectorXd x(2 * g_);
    for (int i = 0; i < 2 * g_; ++i) x[i] = N(rng);
    x *= std::pow(U(rng), 1.0 / (2 * g_)) / x.norm();
    std::vector<cplx> v(g_);
    VecC u = center;
    for (int i = 0; i < g_; ++i) {
      v[i] = cplx(x[2 * i], x[2 * i + 1]);
      u[i] += std::pow(eps, weights[i]) * v[i];
    }
    const cplx lhs = sigma(u) / std::pow(eps, size);
    worst = std::max(worst, std::abs(lhs - schur.eval(v)));
  }
  return worst;
}

}  // namespace trig
