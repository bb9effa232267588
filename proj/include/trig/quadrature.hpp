#pragma once

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <functional>

#include "trig/polynomial.hpp"

namespace trig {

using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

// Vector-valued adaptive Gauss-Legendre on [a, b]: each interval is accepted once the
// 16-node estimate agrees with the sum over its two halves to tol (relative, floor 1).
template <class F>
VecC integrate_adaptive(F&& f, double a, double b, double tol = 1e-13, int max_depth = 30) {
  using Rule = boost::math::quadrature::gauss<double, 16>;
  auto estimate = [&](double lo, double hi) {
    const double m = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    // Boost stores the non-negative half of the symmetric rule; 16 is even so x[0] > 0.
    VecC acc;
    for (size_t i = 0; i < x.size(); ++i) {
      VecC plus = f(m + h * x[i]);
      VecC minus = f(m - h * x[i]);
      if (acc.size() == 0) acc = VecC::Zero(plus.size());
      acc += w[i] * (plus + minus);
    }
    return VecC(h * acc);
  };
  std::function<VecC(double, double, const VecC&, int)> rec = [&](double lo, double hi, const VecC& whole,
                                                                 int depth) -> VecC {
    const double m = 0.5 * (lo + hi);
    VecC left = estimate(lo, m), right = estimate(m, hi);
    VecC two = left + right;
    const double scale = std::max(1.0, two.cwiseAbs().maxCoeff());
    if ((two - whole).cwiseAbs().maxCoeff() < tol * scale || depth >= max_depth) return two;
    return VecC(rec(lo, m, left, depth + 1) + rec(m, hi, right, depth + 1));
  };
  return rec(a, b, estimate(a, b), 0);
}

// Smoothstep t^3 (10 - 15 t + 6 t^2) and its derivative; flattens endpoint singularities
// of the form (x - b)^(e/3) into analytic integrands.
inline double smooth_step(double t) { return t * t * t * (10.0 - 15.0 * t + 6.0 * t * t); }
inline double smooth_step_deriv(double t) { return 30.0 * t * t * (1.0 - t) * (1.0 - t); }

}  // namespace trig
