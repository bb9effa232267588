#include "trig/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace trig {

cplx eval_monomial(const Monomial& m, const CurvePoint& p) {
  if (p.infinity) throw std::invalid_argument("eval_monomial: point at infinity");
  cplx v = std::pow(p.x, m.a);
  if (m.a == 0) v = 1.0;
  if (m.e1) v *= p.yr;
  if (m.e2) v *= p.ys;
  return v;
}

Laurent monomial_series(const Monomial& m, const LocalExpansion& e) {
  Laurent out{0, Series(e.order, cplx(0.0))};
  out.c[0] = 1.0;
  for (int i = 0; i < m.a; ++i) out = laurent_mul(out, e.x);
  if (m.e1) out = laurent_mul(out, e.yr);
  if (m.e2) out = laurent_mul(out, e.ys);
  return out;
}

namespace {

std::vector<Monomial> sorted_first(std::vector<Monomial> all, int count) {
  std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) { return a.weight < b.weight; });
  for (size_t i = 1; i < all.size(); ++i)
    if (all[i].weight == all[i - 1].weight) throw std::logic_error("monomial weights must be distinct");
  all.resize(count);
  return all;
}

}  // namespace

std::vector<Monomial> phi_basis(const CurveModel& c, int count) {
  if (count < 1) throw std::invalid_argument("phi_basis: count must be positive");
  std::vector<Monomial> all;
  const int top = count + 2;
  for (int a = 0; a <= top; ++a) {
    all.push_back({a, 0, 0, 3 * a});
    all.push_back({a, 1, 0, 3 * a + c.r_hat()});
    all.push_back({a, 0, 1, 3 * a + c.s_hat()});
  }
  return sorted_first(all, count);
}

std::vector<Monomial> phi_hat_basis(const CurveModel& c, int count) {
  if (count < 1) throw std::invalid_argument("phi_hat_basis: count must be positive");
  std::vector<Monomial> all;
  const int top = count + 2;
  for (int a = 0; a <= top; ++a) {
    all.push_back({a, 1, 0, 3 * a + c.r_hat()});
    all.push_back({a, 0, 1, 3 * a + c.s_hat()});
    all.push_back({a, 1, 1, 3 * a + 3 * (c.r() + c.s())});
  }
  return sorted_first(all, count);
}

cplx Differential::eval(const CurvePoint& p) const {
  if (p.infinity || p.is_branch()) throw std::invalid_argument("Differential::eval: needs a non-branch affine point");
  cplx v(0.0);
  if (!A.empty()) v += poly_eval(A, p.x) / p.yr;
  if (!B.empty()) v += poly_eval(B, p.x) / p.ys;
  return v / 3.0;
}

Laurent Differential::series(const LocalExpansion& e) const {
  const Laurent dx = laurent_deriv(e.x);
  Laurent total{0, Series(e.order, cplx(0.0))};
  if (!A.empty()) total = laurent_add(total, laurent_mul(laurent_mul(laurent_compose_poly(A, e.x), laurent_inv(e.yr)), dx));
  if (!B.empty()) total = laurent_add(total, laurent_mul(laurent_mul(laurent_compose_poly(B, e.x), laurent_inv(e.ys)), dx));
  return laurent_scale(total, 1.0 / 3.0);
}

HolomorphicBasis holomorphic_basis(const CurveModel& c) {
  HolomorphicBasis hb;
  const int g = c.genus();
  hb.g_r = (c.s_hat() - 1) / 3;
  hb.g_s = (c.r_hat() - 1) / 3;
  if (hb.g_r + hb.g_s != g) throw std::logic_error("g_r + g_s must equal the genus");
  hb.numerators = phi_hat_basis(c, g);
  for (const Monomial& m : hb.numerators) {
    if (m.e1 && m.e2) throw std::logic_error("y_r y_s cannot occur among the first g phi-hat");
    Poly mono(m.a + 1, cplx(0.0));
    mono[m.a] = 1.0;
    Differential d;
    // x^a y_r dx/(3 y_r y_s) = x^a dx/(3 y_s), and symmetrically for y_s.
    if (m.e1) d.B = mono;
    else d.A = mono;
    hb.forms.push_back(d);
  }
  return hb;
}

std::vector<int> u_weights(const CurveModel& c) {
  YoungDiagram y = young_diagram(c.semigroup());
  const int g = c.genus();
  std::vector<int> w(g);
  for (int i = 1; i <= g; ++i) w[i - 1] = y.rows[i - 1] + g - i;
  return w;
}

std::vector<DivisorTerm> holomorphic_divisor(const CurveModel& c, int index) {
  HolomorphicBasis hb = holomorphic_basis(c);
  const Differential& d = hb.forms.at(index);
  // A point's order is at most 2g - 2, so a short expansion suffices. Long expansions are
  // harmful here: coefficients grow like dist^(-n/3) and swamp the relative zero test.
  const int order = 2 * c.genus() + 8;
  std::vector<DivisorTerm> div;
  for (int j = 0; j < c.num_branch(); ++j) {
    int ord = d.series(c.expand_at_branch(j, order)).order();
    if (ord != 0) {
      CurvePoint p;
      p.x = c.branch_point(j);
      p.branch = j;
      div.push_back({p, ord});
    }
  }
  int ord_inf = d.series(c.expand_at_infinity(order)).order();
  if (ord_inf != 0) div.push_back({CurvePoint::at_infinity(), ord_inf});
  // Affine zeros away from the branch points come from the numerator x^a.
  const Monomial& m = hb.numerators.at(index);
  if (m.a > 0 && !c.branch_index(0.0)) {
    for (const CurvePoint& p : c.lift_x(0.0)) div.push_back({p, m.a});
  }
  return div;
}

int divisor_degree(const std::vector<DivisorTerm>& d) {
  int n = 0;
  for (const auto& t : d) n += t.multiplicity;
  return n;
}

}  // namespace trig
