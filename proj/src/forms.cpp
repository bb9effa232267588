#include "trig/forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trig {

cplx sigma_kernel(const CurveModel& c, const CurvePoint& P, const CurvePoint& Q) {
  (void)c;
  if (P.x == Q.x) throw std::domain_error("sigma_kernel: coincident x (pole)");
  const cplx num = P.yr * P.ys + P.yr * Q.ys + Q.yr * P.ys;
  return num / (3.0 * (P.x - Q.x) * P.yr * P.ys);
}

cplx sigma_kernel_dQ(const CurveModel& c, const CurvePoint& P, const CurvePoint& Q) {
  if (P.x == Q.x) throw std::domain_error("sigma_kernel_dQ: coincident x (pole)");
  const auto [dyr, dys] = c.dy_dx(Q);
  const cplx n = P.yr * P.ys + P.yr * Q.ys + Q.yr * P.ys;
  const cplx dn = P.yr * dys + dyr * P.ys;
  const cplx d = P.x - Q.x;
  return (dn * d + n) / (3.0 * d * d * P.yr * P.ys);
}

namespace {

// Descending coefficient list: lam[j] multiplies x^(deg - j).
std::vector<cplx> lambdas(const Poly& p) {
  const int d = poly_degree(p);
  std::vector<cplx> lam(d + 1);
  for (int j = 0; j <= d; ++j) lam[j] = p[d - j];
  return lam;
}

Poly column_in_x(const BiPoly& f, int b) {
  Poly p(f.deg_x() + 1, cplx(0.0));
  for (int a = 0; a <= f.deg_x(); ++a) p[a] = f.at(a, b);
  return poly_trim(p);
}

}  // namespace

DPolynomials build_d_polynomials(const CurveModel& c) {
  const int r = c.r(), s = c.s(), n = r + s;
  const auto lsr = lambdas(c.k()), ls = lambdas(c.k_s()), lr = lambdas(c.k_r());
  const int N = n + 1;
  DPolynomials d{BiPoly(N, N), BiPoly(N, N)};
  for (int j = 0; j <= n - 2; ++j)
    for (int i = 0; i <= n - j - 2; ++i) {
      d.plus.at(n - j - i - 2, i) += static_cast<double>(i + 1) * lsr[j];
      d.minus.at(i, n - j - i - 2) += static_cast<double>(i + 1) * lsr[j];
    }
  for (int j = 0; j <= s - 2; ++j)
    for (int i = 0; i <= s - j - 2; ++i)
      for (int k = 0; k <= r; ++k) d.plus.at(s - j - i - 2, k + i) += static_cast<double>(i + 1) * ls[j] * lr[r - k];
  for (int j = 0; j <= r - 2; ++j)
    for (int i = 0; i <= r - j - 2; ++i)
      for (int k = 0; k <= s; ++k) d.minus.at(k + i, r - j - i - 2) += static_cast<double>(i + 1) * lr[j] * ls[s - k];
  return d;
}

std::vector<Differential> second_kind_from_d(const CurveModel& c) {
  const DPolynomials d = build_d_polynomials(c);
  const HolomorphicBasis hb = holomorphic_basis(c);
  std::vector<Differential> out;
  for (const Monomial& m : hb.numerators) {
    Differential nu;
    if (m.e1) nu.A = column_in_x(d.plus, m.a);
    else nu.B = column_in_x(d.minus, m.a);
    out.push_back(nu);
  }
  return out;
}

BiPoly kernel_identity_lhs(const CurveModel& c) {
  const Poly& k = c.k();
  const Poly dk = poly_deriv(k);
  const int n = poly_degree(k);
  BiPoly f(n + 1, n + 1);
  // k(z) - k(x) - (z - x) k'(z), then divide by (x - z)^2 = (z - x)^2.
  for (int i = 0; i <= n; ++i) {
    f.at(0, i) += k[i];
    f.at(i, 0) -= k[i];
  }
  for (int i = 0; i < static_cast<int>(dk.size()); ++i) {
    f.at(0, i + 1) -= dk[i];
    f.at(1, i) += dk[i];
  }
  return bipoly_div_x_minus_z(bipoly_div_x_minus_z(f));
}

BiPoly kernel_identity_rhs(const CurveModel& c) {
  const auto lam = lambdas(c.k());
  const int n = c.r() + c.s();
  BiPoly f(std::max(n - 1, 0), std::max(n - 1, 0));
  for (int j = 0; j <= n - 2; ++j)
    for (int i = 0; i <= n - j - 2; ++i) f.at(n - j - i - 2, i) -= static_cast<double>(i + 1) * lam[j];
  return f;
}

BiPoly second_kind_kernel(const CurveModel& c) {
  const Poly &kr = c.k_r(), &ks = c.k_s();
  const Poly dkr = poly_deriv(kr), dks = poly_deriv(ks);
  const Poly A = poly_scale(poly_add(poly_scale(poly_mul(dkr, ks), 2.0), poly_mul(kr, dks)), 1.0 / 3.0);
  const Poly C = poly_scale(poly_add(poly_scale(poly_mul(dks, kr), 2.0), poly_mul(dkr, ks)), 1.0 / 3.0);
  const Poly& k = c.k();
  const int D = std::max(c.r() + c.s() + 1, 2);
  BiPoly f(D, D);
  for (size_t i = 0; i < k.size(); ++i) {
    f.at(0, i) += k[i];
    f.at(i, 0) -= k[i];
  }
  for (size_t i = 0; i < A.size(); ++i) {
    f.at(1, i) += A[i];
    f.at(0, i + 1) -= A[i];
  }
  for (size_t i = 0; i < C.size(); ++i) {
    f.at(i + 1, 0) += C[i];
    f.at(i, 1) -= C[i];
  }
  BiPoly g = bipoly_div_x_minus_z(bipoly_div_x_minus_z(f));
  for (auto& row : g.c)
    for (auto& v : row) v *= 3.0;
  return g;
}

std::vector<Differential> second_kind_raw(const CurveModel& c) {
  const HolomorphicBasis hb = holomorphic_basis(c);
  const BiPoly g3 = second_kind_kernel(c);
  // 3G = sum_c z^c p_c(x) - sum_d x^d q_d(z); a monomial x^a z^b goes to p_b when b < g_r
  // (ties included), otherwise to q_a, which requires a < g_s.
  std::vector<Poly> p(hb.g_r, Poly(g3.deg_x() + 1, cplx(0.0)));
  std::vector<Poly> q(hb.g_s, Poly(g3.deg_z() + 1, cplx(0.0)));
  const double scale = std::max(1.0, g3.max_abs());
  for (int a = 0; a <= g3.deg_x(); ++a)
    for (int b = 0; b <= g3.deg_z(); ++b) {
      const cplx v = g3.at(a, b);
      if (v == cplx(0.0)) continue;
      if (b < hb.g_r) p[b][a] += v;
      else if (a < hb.g_s) q[a][b] -= v;
      else if (std::abs(v) > 1e-10 * scale)
        throw std::logic_error("second_kind_raw: kernel monomial outside both families");
    }
  std::vector<Differential> out;
  for (const Monomial& m : hb.numerators) {
    Differential nu;
    if (m.e1) nu.A = poly_trim(p[m.a]);
    else nu.B = poly_trim(q[m.a]);
    out.push_back(nu);
  }
  return out;
}

namespace {

Differential add_scaled(const Differential& a, const Differential& b, cplx s) {
  Differential out;
  out.A = poly_add(a.A, poly_scale(b.A, s));
  out.B = poly_add(a.B, poly_scale(b.B, s));
  return out;
}

}  // namespace

std::vector<Differential> second_kind_basis(const CurveModel& c) {
  const HolomorphicBasis hb = holomorphic_basis(c);
  std::vector<Differential> nu = second_kind_raw(c);
  const int g = c.genus();
  // h_g = 3 y_r y_s nu^II_g / dx = A(x) y_s + B(x) y_r, decomposed along phi-hat.
  const Differential& top = nu[g - 1];
  const std::vector<Monomial> ph = phi_hat_basis(c, 3 * (g + c.r() + c.s() + 4));
  std::vector<cplx> comp(ph.size(), cplx(0.0));
  auto place = [&](int a, int e1, int e2, cplx v) {
    for (size_t j = 0; j < ph.size(); ++j)
      if (ph[j].a == a && ph[j].e1 == e1 && ph[j].e2 == e2) {
        comp[j] += v;
        return;
      }
    throw std::logic_error("second_kind_basis: monomial beyond the phi-hat table");
  };
  for (int a = 0; a < static_cast<int>(top.A.size()); ++a)
    if (top.A[a] != cplx(0.0)) place(a, 0, 1, top.A[a]);
  for (int a = 0; a < static_cast<int>(top.B.size()); ++a)
    if (top.B[a] != cplx(0.0)) place(a, 1, 0, top.B[a]);
  double scale = 0.0;
  for (cplx v : comp) scale = std::max(scale, std::abs(v));
  if (std::abs(comp[g] - 1.0) > 1e-9 * std::max(1.0, scale))
    throw std::logic_error("second_kind_basis: leading phi-hat_g coefficient is not 1");
  for (size_t j = g + 1; j < comp.size(); ++j)
    if (std::abs(comp[j]) > 1e-9 * std::max(1.0, scale))
      throw std::logic_error("second_kind_basis: component above phi-hat_g");
  // Symmetric correction S_{g,j} = S_{j,g} = -c_j keeps the exchange identity intact.
  std::vector<Differential> out = nu;
  for (int j = 0; j < g; ++j) {
    const cplx cj = comp[j];
    if (cj == cplx(0.0)) continue;
    out[g - 1] = add_scaled(out[g - 1], hb.forms[j], -cj);
    if (j != g - 1) out[j] = add_scaled(out[j], hb.forms[g - 1], -cj);
  }
  for (auto& d : out) {
    d.A = poly_trim(d.A);
    d.B = poly_trim(d.B);
    if (d.A.size() == 1 && d.A[0] == cplx(0.0)) d.A.clear();
    if (d.B.size() == 1 && d.B[0] == cplx(0.0)) d.B.clear();
  }
  return out;
}

FormSet::FormSet(CurveModel c) : c_(std::move(c)) {
  HolomorphicBasis hb = holomorphic_basis(c_);
  numerators_ = hb.numerators;
  first_ = hb.forms;
  second_ = second_kind_basis(c_);
}

cplx FormSet::exchange_lhs(const CurvePoint& P, const CurvePoint& Q) const {
  return sigma_kernel_dQ(c_, P, Q) - sigma_kernel_dQ(c_, Q, P);
}

cplx FormSet::exchange_rhs(const CurvePoint& P, const CurvePoint& Q) const {
  cplx acc(0.0);
  for (int i = 0; i < genus(); ++i)
    acc += first_[i].eval(Q) * second_[i].eval(P) - first_[i].eval(P) * second_[i].eval(Q);
  return acc;
}

cplx FormSet::omega(const CurvePoint& P1, const CurvePoint& P2) const {
  cplx acc = sigma_kernel_dQ(c_, P1, P2);
  for (int i = 0; i < genus(); ++i) acc += first_[i].eval(P1) * second_[i].eval(P2);
  return acc;
}

cplx FormSet::fundamental_F(const CurvePoint& P1, const CurvePoint& P2) const {
  const cplx d = P1.x - P2.x;
  return 9.0 * d * d * P1.yr * P1.ys * P2.yr * P2.ys * omega(P1, P2);
}

cplx third_kind(const CurveModel& c, const CurvePoint& P, const CurvePoint& P1, const CurvePoint& P2) {
  return sigma_kernel(c, P, P1) - sigma_kernel(c, P, P2);
}

namespace {

// Trapezoid rule for (1/2 pi i) oint f dx over a closed x-curve sampled by `nodes(n)`,
// which returns points and dx/dtheta on an equispaced theta grid of length n over `span`.
template <class Nodes>
cplx periodic_trapezoid(const PointFunction& f, Nodes&& nodes, double span, int n0) {
  auto estimate = [&](int n) {
    cplx acc(0.0);
    const auto pts = nodes(n);
    for (const auto& [p, dxdth] : pts) acc += f(p) * dxdth;
    return acc * (span / n) / (2.0 * kPi * kI);
  };
  int n = n0;
  cplx prev = estimate(n);
  for (int it = 0; it < 8; ++it) {
    n *= 2;
    cplx next = estimate(n);
    if (std::abs(next - prev) < 1e-10 * std::max(1.0, std::abs(next))) return next;
    prev = next;
  }
  throw std::runtime_error("periodic_trapezoid: residue did not converge");
}

}  // namespace

cplx loop_residue(const CurveModel& c, const PointFunction& f, const CurvePoint& at,
                  const std::vector<cplx>& other_singular_x) {
  double d = 1e300;
  for (cplx b : c.branch_points()) d = std::min(d, std::abs(b - at.x));
  for (cplx x : other_singular_x)
    if (std::abs(x - at.x) > 0.0) d = std::min(d, std::abs(x - at.x));
  const double rho = 1e-3 * d;
  auto nodes = [&](int n) {
    std::vector<std::pair<CurvePoint, cplx>> pts;
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * kPi * k / n;
      const cplx e = std::polar(1.0, th);
      pts.emplace_back(c.continue_straight(at, at.x + rho * e), kI * rho * e);
    }
    return pts;
  };
  return periodic_trapezoid(f, nodes, 2.0 * kPi, 64);
}

cplx infinity_residue(const CurveModel& c, const PointFunction& f, double radius) {
  auto nodes = [&](int n) {
    std::vector<std::pair<CurvePoint, cplx>> pts;
    CurvePoint cur = c.lift_x(radius).front();
    for (int k = 0; k < n; ++k) {
      // Clockwise in x, three turns: the positive loop of the local parameter at infinity.
      const double th = -6.0 * kPi * k / n;
      const cplx x = radius * std::polar(1.0, th);
      if (k > 0) cur = c.continue_straight(cur, x);
      pts.emplace_back(cur, -kI * x);
    }
    const CurvePoint back = c.continue_straight(cur, cplx(radius));
    if (std::abs(back.yr - c.lift_x(radius).front().yr) > 1e-8 * std::abs(back.yr))
      throw std::logic_error("infinity_residue: continuation did not close after three turns");
    return pts;
  };
  return periodic_trapezoid(f, nodes, 6.0 * kPi, 3 * 64);
}

VecC segment_integrals(const CurveModel& c, const std::vector<Differential>& forms, const CurvePoint& P, cplx x) {
  const cplx dx = x - P.x;
  auto integrand = [&](double t) {
    const CurvePoint q = c.continue_straight(P, P.x + t * dx);
    VecC v(forms.size());
    for (size_t i = 0; i < forms.size(); ++i) v[i] = forms[i].eval(q) * dx;
    return v;
  };
  return integrate_adaptive(integrand, 0.0, 1.0);
}

cplx omega_double_integral(const FormSet& f, const CurvePoint& P2, cplx xP1, const CurvePoint& Q2, cplx xQ1) {
  const CurveModel& c = f.curve();
  const CurvePoint Q1 = c.continue_straight(Q2, xQ1);
  const cplx dx = xP1 - P2.x;
  auto third = [&](double t) {
    const CurvePoint p = c.continue_straight(P2, P2.x + t * dx);
    VecC v(1);
    v[0] = third_kind(c, p, Q1, Q2) * dx;
    return v;
  };
  cplx acc = integrate_adaptive(third, 0.0, 1.0)[0];
  const VecC a = segment_integrals(c, f.first(), P2, xP1);
  const VecC b = segment_integrals(c, f.second(), Q2, xQ1);
  for (int i = 0; i < f.genus(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace trig
