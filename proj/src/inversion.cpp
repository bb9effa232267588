#include "trig/inversion.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/SVD>

namespace trig {

namespace {

bool same_point(const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity || q.infinity) return p.infinity && q.infinity;
  if (std::abs(p.x - q.x) > 1e-12 * (1.0 + std::abs(p.x))) return false;
  return std::abs(p.yr - q.yr) <= 1e-9 * (1.0 + std::abs(p.yr));
}

cplx pow_sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

// Central fourth-order difference of f(x_P + h) along the sheet of P.
template <class F>
cplx derivative_along(F&& f, double h) {
  return (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h);
}

// Rows follow the basis, columns the points. A repeated point contributes the t^m Taylor
// coefficient of its local expansion for its m-th repetition (the confluent limit).
MatC basis_columns(const CurveModel& c, const std::vector<Monomial>& basis, const std::vector<CurvePoint>& points) {
  const int n = static_cast<int>(points.size());
  const int m = static_cast<int>(basis.size());
  MatC M(m, n);
  for (int j = 0; j < n; ++j) {
    int repeat = 0;
    for (int i = 0; i < j; ++i)
      if (same_point(points[i], points[j])) ++repeat;
    const CurvePoint& p = points[j];
    if (repeat == 0 && !p.infinity && !p.is_branch()) {
      for (int i = 0; i < m; ++i) M(i, j) = eval_monomial(basis[i], p);
      continue;
    }
    const LocalExpansion e = c.expand(p, repeat + 4);
    for (int i = 0; i < m; ++i) M(i, j) = monomial_series(basis[i], e).coeff(repeat);
  }
  return M;
}

}  // namespace

std::vector<Monomial> basis_of(const CurveModel& c, BasisKind kind, int count) {
  return kind == BasisKind::Phi ? phi_basis(c, count) : phi_hat_basis(c, count);
}

MatC fs_matrix(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& points) {
  return basis_columns(c, basis_of(c, kind, static_cast<int>(points.size())), points);
}

cplx fs_det(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& points) {
  return fs_matrix(c, kind, points).determinant();
}

cplx MuFunction::mu_coeff(int k) const { return pow_sign(n() - k) * a[k]; }

cplx MuFunction::eval(const CurvePoint& p) const {
  cplx v(0.0);
  for (size_t k = 0; k < a.size(); ++k) v += a[k] * eval_monomial(basis[k], p);
  return v;
}

MuFunction mu_function(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& base) {
  const int n = static_cast<int>(base.size());
  MuFunction mu;
  mu.kind = kind;
  mu.basis = basis_of(c, kind, n + 1);
  mu.a.assign(n + 1, cplx(0.0));
  mu.a[n] = 1.0;
  if (n == 0) return mu;
  // Column j holds phi_0..phi_n at P_j; solve for a_0..a_{n-1}.
  const MatC full = basis_columns(c, mu.basis, base);
  const MatC Mt = full.topRows(n).transpose();
  Eigen::JacobiSVD<MatC> svd(Mt, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(n - 1) < 1e-10 * sv(0)) throw std::domain_error("mu_function: special base divisor");
  const VecC sol = svd.solve(VecC(-full.row(n).transpose()));
  for (int k = 0; k < n; ++k) mu.a[k] = sol[k];
  return mu;
}

std::vector<CurvePoint> alpha_map(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& base) {
  const MuFunction mu = mu_function(c, kind, base);
  // mu = A(x) + B(x) y_r + C(x) y_s, with y_r y_s = k(x).
  Poly A{0.0}, B{0.0}, C{0.0};
  for (size_t i = 0; i < mu.a.size(); ++i) {
    const Monomial& m = mu.basis[i];
    Poly xa(m.a + 1, cplx(0.0));
    xa[m.a] = mu.a[i];
    if (m.e1 && m.e2) A = poly_add(A, poly_mul(xa, c.k()));
    else if (m.e1) B = poly_add(B, xa);
    else if (m.e2) C = poly_add(C, xa);
    else A = poly_add(A, xa);
  }
  const Poly A3 = poly_mul(A, poly_mul(A, A));
  const Poly B3 = poly_mul(B, poly_mul(B, B));
  const Poly C3 = poly_mul(C, poly_mul(C, C));
  Poly norm = poly_add(A3, poly_add(poly_mul(B3, c.f_r()), poly_mul(C3, c.f_s())));
  norm = poly_add(norm, poly_scale(poly_mul(poly_mul(A, B), poly_mul(C, c.k())), -3.0));
  std::vector<cplx> roots = poly_roots(poly_trim(norm, 1e-13 * std::abs(norm.back())));

  auto remove_nearest = [&](cplx x) {
    if (roots.empty()) throw std::logic_error("alpha_map: fewer roots than known zeros");
    auto it = std::min_element(roots.begin(), roots.end(),
                               [&](cplx p, cplx q) { return std::abs(p - x) < std::abs(q - x); });
    roots.erase(it);
  };
  for (const CurvePoint& p : base)
    if (!p.infinity) remove_nearest(p.x);
  if (kind == BasisKind::PhiHat)
    for (cplx b : c.branch_points()) remove_nearest(b);

  // A root at a base abscissa is a multiple root of the norm (mu vanishes on several lifts of
  // that fiber); snap it, then take the lifts not already occupied by base points or outputs.
  std::vector<CurvePoint> used(base.begin(), base.end());
  auto is_used = [&](const CurvePoint& p) {
    return std::any_of(used.begin(), used.end(), [&](const CurvePoint& q) {
      return !q.infinity && std::abs(p.x - q.x) < 1e-9 * (1.0 + std::abs(q.x)) &&
             std::abs(p.yr - q.yr) < 1e-6 * (1.0 + std::abs(q.yr));
    });
  };
  std::vector<CurvePoint> out;
  for (cplx x : roots) {
    for (const CurvePoint& p : base)
      if (!p.infinity && std::abs(x - p.x) < 1e-4 * (1.0 + std::abs(p.x))) x = p.x;
    if (auto j = c.branch_index(x, 1e-6)) {
      out.push_back(c.lift_x(c.branch_point(*j))[0]);
      continue;
    }
    auto lifts = c.lift_x(x);
    std::sort(lifts.begin(), lifts.end(),
              [&](const CurvePoint& p, const CurvePoint& q) { return std::abs(mu.eval(p)) < std::abs(mu.eval(q)); });
    auto pick = std::find_if(lifts.begin(), lifts.end(), [&](const CurvePoint& p) { return !is_used(p); });
    out.push_back(pick == lifts.end() ? lifts.front() : *pick);
    used.push_back(out.back());
  }
  return out;
}

JacobiReport jacobi_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts,
                          const CurvePoint& probe) {
  const int g = f.genus();
  if (static_cast<int>(pts.size()) != g) throw std::invalid_argument("jacobi_check: need g points");
  const VecC u = shifted_abel_map(f, S.periods(), pts);
  const MatC W = S.wp(u);
  const MuFunction mu = mu_function(f.curve(), BasisKind::PhiHat, pts);
  JacobiReport rep;

  cplx rhs = eval_monomial(mu.basis[g], probe);
  double scale = std::abs(rhs);
  for (int j = 1; j <= g; ++j) {
    const cplx t = W(g - 1, j - 1) * eval_monomial(mu.basis[j - 1], probe);
    rhs -= t;
    scale += std::abs(t);
  }
  rep.part1 = std::abs(mu.eval(probe) - rhs) / scale;

  double amax = 1.0;
  for (int k = 0; k < g; ++k) amax = std::max(amax, std::abs(mu.a[k]));
  for (int k = 0; k < g; ++k) {
    rep.part2 = std::max(rep.part2, std::abs(W(g - 1, k) + mu.a[k]) / amax);
    rep.part2_printed = std::max(rep.part2_printed, std::abs(W(g - 1, k) - pow_sign(g - k) * mu.mu_coeff(k)) / amax);
  }
  return rep;
}

VanishingReport vanishing_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts) {
  const int g = f.genus();
  const int k = static_cast<int>(pts.size());
  if (k < 1 || k > g) throw std::invalid_argument("vanishing_check: need 1 <= k <= g points");
  const VecC u = shifted_abel_map(f, S.periods(), pts);
  const FrobeniusData fd = frobenius_data(young_diagram(f.curve().semigroup()), k);
  const MuFunction mu = mu_function(f.curve(), BasisKind::PhiHat, pts);
  VanishingReport rep;
  rep.k = k;
  rep.rank = fd.rank;
  rep.N = fd.N;
  rep.sigma_rel = S.relative_magnitude(u);
  auto rel = [](cplx got, cplx expected) { return std::abs(got - expected) / std::max(1.0, std::abs(expected)); };

  if (k == g) {
    const MatC W = S.wp(u);
    const int rs = f.curve().r() + f.curve().s();
    for (int i = 1; i <= g; ++i) {
      rep.ratio = std::max(rep.ratio, rel(W(g - 1, i - 1), pow_sign(g - i) * mu.mu_coeff(i - 1)));
      rep.ratio_printed = std::max(rep.ratio_printed, rel(W(g - 1, i - 1), pow_sign(rs - i) * mu.mu_coeff(i - 1)));
    }
    return rep;
  }

  auto zero_based = [](std::vector<int> t) {
    for (int& i : t) --i;
    return t;
  };
  const std::vector<int> sharp = zero_based(fd.sharp);
  if (fd.rank == 1) {
    std::vector<std::vector<int>> tuples{sharp};
    for (int i = 1; i <= g; ++i) tuples.push_back(zero_based(fd.sharp_i(i)));
    const auto v = S.partials(tuples, u);
    for (int i = 1; i <= g; ++i) {
      const cplx expected = i <= k ? pow_sign(k - i + 1) * mu.mu_coeff(i - 1) : cplx(i == k + 1 ? 1.0 : 0.0);
      rep.ratio = std::max(rep.ratio, rel(v[i] / v[0], expected));
    }
    if (k == 1) {
      const cplx printed = eval_monomial(mu.basis[1], pts[0]) / eval_monomial(mu.basis[0], pts[0]);
      rep.ratio_printed = rel(v[1] / v[0], printed);
    }
  }

  // Every multi-index of order < n_k.
  std::vector<std::vector<int>> low{{}};
  for (size_t start = 0; start < low.size(); ++start) {
    if (static_cast<int>(low[start].size()) + 1 >= fd.rank) continue;
    const int from = low[start].empty() ? 0 : low[start].back();
    for (int i = from; i < g; ++i) {
      auto t = low[start];
      t.push_back(i);
      low.push_back(t);
    }
  }
  low.push_back(sharp);
  const auto lv = S.partials(low, u);
  for (size_t i = 0; i + 1 < lv.size(); ++i) rep.low_order = std::max(rep.low_order, std::abs(lv[i]) / std::abs(lv.back()));

  std::vector<std::vector<int>> dirs;
  for (int l = 0; l <= fd.N; ++l) dirs.push_back(std::vector<int>(l, g - 1));
  const auto d = S.partials(dirs, u);
  for (int l = 0; l < fd.N; ++l) rep.directional = std::max(rep.directional, std::abs(d[l]) / std::abs(d[fd.N]));
  return rep;
}

double riemann_fundamental_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts,
                                 const CurvePoint& P) {
  const int g = f.genus();
  const VecC u = shifted_abel_map(f, S.periods(), pts);
  const MatC W = S.wp(abel_point(f, P) - u);
  const auto& ph = f.numerators();
  double worst = 0.0;
  for (const CurvePoint& Pa : pts) {
    cplx lhs(0.0);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) lhs += W(i, j) * eval_monomial(ph[i], P) * eval_monomial(ph[j], Pa);
    const cplx dx = P.x - Pa.x;
    const cplx rhs = f.fundamental_F(P, Pa) / (dx * dx);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return worst;
}

double vector_field_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts) {
  const int g = f.genus();
  const CurveModel& c = f.curve();
  const VecC u = shifted_abel_map(f, S.periods(), pts);
  const VecC grad = S.gradient(u);
  VecC lhs(g), rhs(g);
  for (int a = 0; a < g; ++a) {
    const CurvePoint& Pa = pts[a];
    double dist = 1.0;
    for (cplx b : c.branch_points()) dist = std::min(dist, std::abs(Pa.x - b));
    const double h = 1e-3 * dist;
    auto sig = [&](double t) {
      // Moving P_a to x_a + t changes u by the integral of nu^I along the segment.
      return S.sigma(u + segment_integrals(c, f.first(), Pa, Pa.x + t));
    };
    lhs[a] = 3.0 * Pa.yr * Pa.ys * derivative_along(sig, h);
    rhs[a] = 0.0;
    for (int i = 0; i < g; ++i) rhs[a] += eval_monomial(f.numerators()[i], Pa) * grad[i];
  }
  return (lhs - rhs).norm() / rhs.norm();
}

}  // namespace trig
