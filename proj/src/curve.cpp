#include "trig/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trig {

NonsingularityReport check_nonsingular(const std::vector<cplx>& b, double tol) {
  double scale = 1.0;
  for (cplx v : b) scale = std::max(scale, std::abs(v));
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (std::abs(b[i] - b[j]) <= tol * scale)
        return NonsingularityReport{false, static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  return {};
}

CurveModel::CurveModel(int r, int s, std::vector<cplx> branch_points)
    : sg_(build_semigroup(r, s)), b_(std::move(branch_points)) {
  if (static_cast<int>(b_.size()) != r + s)
    throw std::invalid_argument("expected " + std::to_string(r + s) + " branch points, got " +
                                std::to_string(b_.size()));
  if (sg_.genus < 1) throw std::invalid_argument("genus must be at least 1");
  auto ns = check_nonsingular(b_);
  if (!ns.ok)
    throw std::invalid_argument("branch points " + std::to_string(ns.i) + " and " + std::to_string(ns.j) +
                                " coincide; the curve is singular");
  ks_ = poly_from_roots(std::vector<cplx>(b_.begin(), b_.begin() + s));
  kr_ = poly_from_roots(std::vector<cplx>(b_.begin() + s, b_.end()));
  k_ = poly_mul(kr_, ks_);
  fr_ = poly_mul(poly_mul(kr_, kr_), ks_);
  fs_ = poly_mul(poly_mul(ks_, ks_), kr_);
}

std::optional<int> CurveModel::branch_index(cplx x, double tol) const {
  for (int j = 0; j < num_branch(); ++j)
    if (std::abs(x - b_[j]) <= tol * std::max(1.0, std::abs(b_[j]))) return j;
  return std::nullopt;
}

CurvePoint CurveModel::point(cplx x, cplx yr) const {
  if (auto j = branch_index(x)) {
    CurvePoint p;
    p.x = b_[*j];
    p.branch = *j;
    return p;
  }
  // Snap yr to the nearest exact cube root of f_r(x).
  cplx rho = cbrt_pow(poly_eval(fr_, x), 1);
  cplx best = rho;
  for (int l = 1; l < 3; ++l)
    if (std::abs(rho * zeta3(l) - yr) < std::abs(best - yr)) best = rho * zeta3(l);
  CurvePoint p;
  p.x = x;
  p.yr = best;
  p.ys = poly_eval(k_, x) / best;
  return p;
}

std::vector<CurvePoint> CurveModel::lift_x(cplx x) const {
  if (auto j = branch_index(x)) {
    CurvePoint p;
    p.x = b_[*j];
    p.branch = *j;
    return {p};
  }
  cplx rho = cbrt_pow(poly_eval(fr_, x), 1);
  cplx kx = poly_eval(k_, x);
  std::vector<CurvePoint> out;
  for (int l = 0; l < 3; ++l) {
    CurvePoint p;
    p.x = x;
    p.yr = rho * zeta3(l);
    p.ys = kx / p.yr;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const CurvePoint& a, const CurvePoint& b) { return std::arg(a.yr) < std::arg(b.yr); });
  return out;
}

CurvePoint CurveModel::continue_straight(const CurvePoint& p, cplx x) const {
  if (p.infinity || p.is_branch()) throw std::invalid_argument("continue_straight: needs a non-branch affine point");
  cplx ratio(1.0);
  for (int j = 0; j < num_branch(); ++j) ratio *= cbrt_pow((x - b_[j]) / (p.x - b_[j]), exponent(j));
  CurvePoint q;
  q.x = x;
  q.yr = p.yr * ratio;
  q.ys = poly_eval(k_, x) / q.yr;
  return q;
}

CurvePoint CurveModel::cyclic_action(const CurvePoint& p) const {
  if (p.infinity || p.is_branch()) return p;
  CurvePoint q = p;
  q.yr = p.yr * zeta3(1);
  q.ys = p.ys * zeta3(2);
  return q;
}

std::vector<double> CurveModel::relation_residuals(const CurvePoint& p) const {
  if (p.infinity) return {0.0, 0.0, 0.0};
  const cplx kr = poly_eval(kr_, p.x), ks = poly_eval(ks_, p.x);
  auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); };
  return {rel(p.yr * p.yr, p.ys * kr), rel(p.yr * p.ys, kr * ks), rel(p.ys * p.ys, p.yr * ks)};
}

namespace {

// prod_j (1 + c_j u)^(e_j / 3) as a power series in u, truncated to n terms.
Series product_series(const std::vector<cplx>& c, const std::vector<int>& e, int n) {
  Series out(n, cplx(0.0));
  out[0] = 1.0;
  for (size_t j = 0; j < c.size(); ++j) {
    Series f(n, cplx(0.0));
    f[0] = 1.0;
    if (n > 1) f[1] = c[j];
    out = series_mul(out, series_pow1(f, e[j] / 3.0));
  }
  return out;
}

// Spread a series in u = t^3 to a series in t.
Series spread3(const Series& s, int n) {
  Series out(n, cplx(0.0));
  for (int i = 0; 3 * i < n && i < static_cast<int>(s.size()); ++i) out[3 * i] = s[i];
  return out;
}

}  // namespace

LocalExpansion CurveModel::expand_at_infinity(int order) const {
  if (order < 1) throw std::invalid_argument("expand_at_infinity: order must be positive");
  // x = t^-3, so x - b_j = t^-3 (1 - b_j t^3) and y_rhat = t^-rhat prod (1 - b_j t^3)^(e_j/3).
  const int nu = order / 3 + 2;
  std::vector<cplx> c;
  std::vector<int> er, es;
  for (int j = 0; j < num_branch(); ++j) {
    c.push_back(-b_[j]);
    er.push_back(exponent(j));
    es.push_back(3 - exponent(j));
  }
  LocalExpansion out;
  out.order = order;
  out.x = Laurent{-3, Series(order, cplx(0.0))};
  out.x.c[0] = 1.0;
  out.yr = Laurent{-r_hat(), spread3(product_series(c, er, nu), order)};
  out.ys = Laurent{-s_hat(), spread3(product_series(c, es, nu), order)};
  return out;
}

LocalExpansion CurveModel::expand_at_branch(int j, int order) const {
  if (order < 1) throw std::invalid_argument("expand_at_branch: order must be positive");
  const int nu = order / 3 + 2;
  // x - b_i = (b_j - b_i)(1 + t^3/(b_j - b_i)) for i != j, and x - b_j = t^3.
  cplx pr(1.0), ps(1.0);
  std::vector<cplx> c;
  std::vector<int> er, es;
  for (int i = 0; i < num_branch(); ++i) {
    if (i == j) continue;
    cplx d = b_[j] - b_[i];
    pr *= cbrt_pow(d, exponent(i));
    ps *= cbrt_pow(d, 3 - exponent(i));
    c.push_back(1.0 / d);
    er.push_back(exponent(i));
    es.push_back(3 - exponent(i));
  }
  LocalExpansion out;
  out.order = order;
  out.x = Laurent{0, Series(order, cplx(0.0))};
  out.x.c[0] = b_[j];
  if (order > 3) out.x.c[3] = 1.0;
  Series yr = spread3(product_series(c, er, nu), order);
  Series ys = spread3(product_series(c, es, nu), order);
  for (auto& v : yr) v *= pr;
  // y_rhat y_shat = k exactly, which fixes the relative branch of y_shat.
  cplx kprime(1.0);
  for (int i = 0; i < num_branch(); ++i)
    if (i != j) kprime *= (b_[j] - b_[i]);
  cplx ys0 = kprime / pr;
  for (auto& v : ys) v *= ys0;
  out.yr = Laurent{exponent(j), yr};
  out.ys = Laurent{3 - exponent(j), ys};
  return out;
}

LocalExpansion CurveModel::expand_at_point(const CurvePoint& p, int order) const {
  if (order < 1) throw std::invalid_argument("expand_at_point: order must be positive");
  if (p.infinity || p.is_branch()) throw std::invalid_argument("expand_at_point: needs a non-branch affine point");
  LocalExpansion out;
  out.order = order;
  out.x = Laurent{0, Series(order, cplx(0.0))};
  out.x.c[0] = p.x;
  if (order > 1) out.x.c[1] = 1.0;
  Series fr = series_from_poly(poly_shift(fr_, p.x), order);
  const cplx f0 = fr[0];
  for (auto& v : fr) v /= f0;
  Series yr = series_pow1(fr, 1.0 / 3.0);
  for (auto& v : yr) v *= p.yr;
  Series k = series_from_poly(poly_shift(k_, p.x), order);
  out.yr = Laurent{0, yr};
  out.ys = Laurent{0, series_mul(k, series_inv(yr))};
  return out;
}

LocalExpansion CurveModel::expand(const CurvePoint& p, int order) const {
  if (p.infinity) return expand_at_infinity(order);
  if (p.is_branch()) return expand_at_branch(p.branch, order);
  return expand_at_point(p, order);
}

std::pair<cplx, cplx> CurveModel::dy_dx(const CurvePoint& p) const {
  // log-derivatives: y_r'/y_r = (2 k_r'/k_r + k_s'/k_s)/3 and y_s'/y_s = (2 k_s'/k_s + k_r'/k_r)/3,
  // written without dividing by k_r or k_s separately.
  const cplx kr = poly_eval(kr_, p.x), ks = poly_eval(ks_, p.x);
  const cplx dkr = poly_eval(poly_deriv(kr_), p.x), dks = poly_eval(poly_deriv(ks_), p.x);
  const cplx kk = kr * ks;
  const cplx lr = (2.0 * dkr * ks + kr * dks) / (3.0 * kk);
  const cplx ls = (2.0 * dks * kr + ks * dkr) / (3.0 * kk);
  return {p.yr * lr, p.ys * ls};
}

}  // namespace trig
