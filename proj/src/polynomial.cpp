#include "trig/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trig {

Poly poly_from_roots(const std::vector<cplx>& roots) {
  Poly p{cplx(1.0)};
  for (cplx r : roots) p = poly_mul(p, Poly{-r, cplx(1.0)});
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_scale(const Poly& a, cplx s) {
  Poly out(a);
  for (auto& v : out) v *= s;
  return out;
}

Poly poly_deriv(const Poly& a) {
  if (a.size() <= 1) return {cplx(0.0)};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<double>(i);
  return out;
}

Poly poly_trim(Poly a, double tol) {
  while (a.size() > 1 && std::abs(a.back()) <= tol) a.pop_back();
  return a;
}

cplx poly_eval(const Poly& a, cplx x) {
  cplx acc(0.0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

int poly_degree(const Poly& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != cplx(0.0)) return static_cast<int>(i);
  return -1;
}

Poly poly_shift(const Poly& a, cplx x0) {
  // Repeated synthetic division (Taylor shift).
  Poly c(a);
  const int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k)
    for (int j = n - 2; j >= k; --j) c[j] += x0 * c[j + 1];
  return c;
}

std::vector<cplx> poly_roots(const Poly& a_in) {
  Poly a = poly_trim(a_in);
  const int n = poly_degree(a);
  if (n <= 0) return {};
  a.resize(n + 1);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -a[i] / a[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  const Poly da = poly_deriv(a);
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      cplx f = poly_eval(a, r), df = poly_eval(da, r);
      if (std::abs(df) == 0.0) break;
      cplx step = f / df;
      // Newton can jump to a neighbouring root near clusters; only accept shrinking steps.
      if (std::abs(step) > 1e-3 * (1.0 + std::abs(r))) break;
      r -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(r))) break;
    }
  }
  return roots;
}

cplx BiPoly::eval(cplx x, cplx z) const {
  cplx acc(0.0);
  for (int a = deg_x(); a >= 0; --a) {
    cplx row(0.0);
    for (int b = deg_z(); b >= 0; --b) row = row * z + c[a][b];
    acc = acc * x + row;
  }
  return acc;
}

double BiPoly::max_abs() const {
  double m = 0.0;
  for (const auto& row : c)
    for (cplx v : row) m = std::max(m, std::abs(v));
  return m;
}

BiPoly bipoly_div_x_minus_z(const BiPoly& f, double tol) {
  // Write f = sum_a x^a F_a(z) and q = sum_a x^a Q_a(z). Then
  // F_a = Q_{a-1} - z Q_a, so Q_{a-1} = F_a + z Q_a from the top down,
  // and the remainder F_0 + z Q_0 has to vanish.
  const int da = f.deg_x(), db = f.deg_z();
  if (da < 1) throw std::invalid_argument("bipoly_div_x_minus_z: degree in x is zero");
  BiPoly q(da - 1, db + 1);
  std::vector<cplx> cur(db + 2, cplx(0.0));
  for (int a = da; a >= 1; --a) {
    std::vector<cplx> next(db + 2, cplx(0.0));
    for (int b = 0; b <= db; ++b) next[b] += f.c[a][b];
    for (int b = 0; b + 1 <= db + 1; ++b) next[b + 1] += cur[b];
    cur = next;
    for (int b = 0; b <= db + 1; ++b) q.c[a - 1][b] = cur[b];
  }
  double rem = 0.0;
  for (int b = 0; b <= db + 1; ++b) {
    cplx v = (b <= db ? f.c[0][b] : cplx(0.0)) + (b >= 1 ? q.c[0][b - 1] : cplx(0.0));
    rem = std::max(rem, std::abs(v));
  }
  if (rem > tol * std::max(1.0, f.max_abs()))
    throw std::runtime_error("bipoly_div_x_minus_z: polynomial is not divisible by (x - z)");
  return q;
}

Series series_mul(const Series& a, const Series& b) {
  const size_t n = std::min(a.size(), b.size());
  Series out(n, cplx(0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series series_inv(const Series& a) {
  if (a.empty() || a[0] == cplx(0.0)) throw std::invalid_argument("series_inv: zero constant term");
  Series out(a.size(), cplx(0.0));
  out[0] = 1.0 / a[0];
  for (size_t k = 1; k < a.size(); ++k) {
    cplx s(0.0);
    for (size_t j = 1; j <= k; ++j) s += a[j] * out[k - j];
    out[k] = -s / a[0];
  }
  return out;
}

Series series_pow1(const Series& f, double alpha) {
  // g = f^alpha satisfies f g' = alpha f' g.
  const size_t n = f.size();
  Series g(n, cplx(0.0));
  if (n == 0) return g;
  g[0] = 1.0;
  for (size_t k = 1; k < n; ++k) {
    cplx s(0.0);
    for (size_t j = 1; j <= k; ++j)
      s += (alpha * static_cast<double>(j) - static_cast<double>(k - j)) * f[j] * g[k - j];
    g[k] = s / static_cast<double>(k);
  }
  return g;
}

Series series_from_poly(const Poly& p, int n) {
  Series s(n, cplx(0.0));
  for (int i = 0; i < n && i < static_cast<int>(p.size()); ++i) s[i] = p[i];
  return s;
}

int Laurent::order(double tol) const {
  double scale = 0.0;
  for (cplx v : c) scale = std::max(scale, std::abs(v));
  for (size_t k = 0; k < c.size(); ++k)
    if (std::abs(c[k]) > tol * std::max(scale, 1e-300)) return val + static_cast<int>(k);
  throw std::runtime_error("Laurent::order: series is numerically zero");
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  return Laurent{a.val + b.val, series_mul(a.c, b.c)};
}

Laurent laurent_inv(const Laurent& a) {
  size_t k = 0;
  while (k < a.c.size() && a.c[k] == cplx(0.0)) ++k;
  if (k == a.c.size()) throw std::invalid_argument("laurent_inv: zero series");
  Series shifted(a.c.begin() + static_cast<long>(k), a.c.end());
  return Laurent{-(a.val + static_cast<int>(k)), series_inv(shifted)};
}

Laurent laurent_deriv(const Laurent& a) {
  Laurent out{a.val - 1, Series(a.c.size(), cplx(0.0))};
  for (size_t k = 0; k < a.c.size(); ++k) out.c[k] = a.c[k] * static_cast<double>(a.val + static_cast<int>(k));
  return out;
}

Laurent laurent_add(const Laurent& a, const Laurent& b) {
  const int v = std::min(a.val, b.val);
  // Coefficients are reliable up to min(val + size) - 1 for each operand.
  const int top = std::min(a.val + static_cast<int>(a.c.size()), b.val + static_cast<int>(b.c.size()));
  Laurent out{v, Series(std::max(0, top - v), cplx(0.0))};
  for (int k = 0; k < static_cast<int>(out.c.size()); ++k) out.c[k] = a.coeff(v + k) + b.coeff(v + k);
  return out;
}

Laurent laurent_scale(const Laurent& a, cplx s) {
  Laurent out = a;
  for (auto& v : out.c) v *= s;
  return out;
}

Laurent laurent_compose_poly(const Poly& p, const Laurent& x) {
  const int n = static_cast<int>(x.c.size());
  Laurent acc{0, Series(n, cplx(0.0))};
  for (size_t i = p.size(); i-- > 0;) {
    acc = laurent_mul(acc, x);
    Laurent cst{0, Series(n, cplx(0.0))};
    cst.c[0] = p[i];
    acc = laurent_add(acc, cst);
  }
  return acc;
}

}  // namespace trig
