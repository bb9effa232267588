#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace trig {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline const cplx kI{0.0, 1.0};

// Primitive cube root of unity exp(2 pi i / 3).
inline cplx zeta3(int power = 1) {
  int p = ((power % 3) + 3) % 3;
  return std::polar(1.0, 2.0 * kPi * p / 3.0);
}

// Principal branch of z^(e/3).
inline cplx cbrt_pow(cplx z, int e) {
  if (z == cplx(0.0)) return cplx(0.0);
  return std::exp(static_cast<double>(e) * std::log(z) / 3.0);
}

// Univariate polynomial, ascending coefficients: c[i] multiplies x^i.
using Poly = std::vector<cplx>;

Poly poly_from_roots(const std::vector<cplx>& roots);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, cplx s);
Poly poly_deriv(const Poly& a);
Poly poly_trim(Poly a, double tol = 0.0);
cplx poly_eval(const Poly& a, cplx x);
int poly_degree(const Poly& a);
// Coefficients of p(x0 + t) in t.
Poly poly_shift(const Poly& a, cplx x0);
// Roots by companion-matrix eigenvalues followed by Newton polishing.
std::vector<cplx> poly_roots(const Poly& a);

// Bivariate polynomial: c[a][b] multiplies x^a z^b.
struct BiPoly {
  std::vector<std::vector<cplx>> c;

  BiPoly() = default;
  BiPoly(int dx, int dz) : c(dx + 1, std::vector<cplx>(dz + 1, cplx(0.0))) {}
  int deg_x() const { return static_cast<int>(c.size()) - 1; }
  int deg_z() const { return c.empty() ? -1 : static_cast<int>(c[0].size()) - 1; }
  cplx& at(int a, int b) { return c[a][b]; }
  cplx at(int a, int b) const {
    if (a < 0 || b < 0 || a > deg_x() || b > deg_z()) return cplx(0.0);
    return c[a][b];
  }
  cplx eval(cplx x, cplx z) const;
  double max_abs() const;
};

// Exact quotient F(x,z)/(x - z); throws if the remainder exceeds tol*max|F|.
BiPoly bipoly_div_x_minus_z(const BiPoly& f, double tol = 1e-9);

// Truncated power series c[0] + c[1] t + ... + c[n-1] t^(n-1).
using Series = std::vector<cplx>;

Series series_mul(const Series& a, const Series& b);
Series series_inv(const Series& a);
// f^alpha for f[0] = 1.
Series series_pow1(const Series& f, double alpha);
Series series_from_poly(const Poly& p, int n);

// Laurent series t^val * (c[0] + c[1] t + ...).
struct Laurent {
  int val = 0;
  Series c;
  // Order of vanishing (negative for poles); c must have a nonzero entry.
  int order(double tol = 1e-12) const;
  cplx coeff(int power) const {
    int k = power - val;
    if (k < 0 || k >= static_cast<int>(c.size())) return cplx(0.0);
    return c[k];
  }
};

Laurent laurent_mul(const Laurent& a, const Laurent& b);
Laurent laurent_inv(const Laurent& a);
// Sum on the smaller valuation; the result keeps the shorter reliable length.
Laurent laurent_add(const Laurent& a, const Laurent& b);
Laurent laurent_scale(const Laurent& a, cplx s);
// p(x(t)) for a polynomial p and a Laurent series x(t).
Laurent laurent_compose_poly(const Poly& p, const Laurent& x);
// d/dt
Laurent laurent_deriv(const Laurent& a);

}  // namespace trig
