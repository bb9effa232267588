#include "trig/periods.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace trig {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

int nearest_sheet(const std::vector<CurvePoint>& lifts, cplx yr) {
  int best = 0;
  for (int l = 1; l < static_cast<int>(lifts.size()); ++l)
    if (std::abs(lifts[l].yr - yr) < std::abs(lifts[best].yr - yr)) best = l;
  return best;
}

double positive_mod(double a, double m) {
  double r = std::fmod(a, m);
  return r < 0 ? r + m : r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Continuous branch of y_rhat on the smoothed segment x = b_p0 + D phi(t).
struct EdgeSample {
  cplx x, yr, k, dx;
};

EdgeSample edge_sample(const CurveModel& c, int p0, int p1, double t) {
  const auto& b = c.branch_points();
  const cplx D = b[p1] - b[p0];
  const double ph = smooth_step(t), ph1 = smooth_step(1.0 - t);
  const cplx mid = 0.5 * (b[p0] + b[p1]);
  EdgeSample s{b[p0] + D * ph, 1.0, 1.0, D * smooth_step_deriv(t)};
  for (int j = 0; j < c.num_branch(); ++j) {
    const int e = c.exponent(j);
    if (j == p0) {
      s.yr *= cbrt_pow(D, e) * std::pow(ph, e / 3.0);
      s.k *= D * ph;
    } else if (j == p1) {
      s.yr *= cbrt_pow(-D, e) * std::pow(ph1, e / 3.0);
      s.k *= -D * ph1;
    } else {
      s.yr *= cbrt_pow(mid - b[j], e) * cbrt_pow((s.x - b[j]) / (mid - b[j]), e);
      s.k *= s.x - b[j];
    }
  }
  return s;
}

// y_rhat near B_j divided by (x - b_j)^(e_j/3), continued from the straight chord.
cplx regular_part(const CurveModel& c, int j, cplx x) {
  const auto& b = c.branch_points();
  cplx h(1.0);
  for (int i = 0; i < c.num_branch(); ++i) {
    if (i == j) continue;
    h *= cbrt_pow(b[j] - b[i], c.exponent(i)) * cbrt_pow((x - b[i]) / (b[j] - b[i]), c.exponent(i));
  }
  return h;
}

// Direction of the edge leaving/entering B_j on a given sheet, as an angle of the local
// parameter t with t^3 = x - b_j.
double ray_angle(const CurveModel& c, int p0, int p1, int sheet, bool at_end) {
  const double t = at_end ? 1.0 - 1e-3 : 1e-3;
  const EdgeSample s = edge_sample(c, p0, p1, t);
  const cplx yr = s.yr * zeta3(sheet);
  const int j = at_end ? p1 : p0;
  const int e = c.exponent(j);
  const cplx w = cbrt_pow(s.x - c.branch_point(j), 1);
  const cplx q = yr / (std::pow(w, e) * regular_part(c, j, s.x));
  const int mp = ((static_cast<int>(std::lround(std::arg(q) / (kTwoPi / 3.0))) % 3) + 3) % 3;
  if (std::abs(q - zeta3(mp)) > 1e-6) throw std::logic_error("ray_angle: local branch mismatch");
  const int m = (mp * e) % 3;
  return positive_mod(std::arg(s.x - c.branch_point(j)) / 3.0 + kTwoPi * m / 3.0, kTwoPi);
}

bool in_ccw(double th, double a, double b) {
  const double d = positive_mod(th - a, kTwoPi);
  return d < positive_mod(b - a, kTwoPi) && d > 0.0;
}

}  // namespace

std::array<int, 3> monodromy_polygon(const CurveModel& c, cplx base, const std::vector<cplx>& vertices) {
  const auto lifts = c.lift_x(base);
  if (lifts.size() != 3) throw std::invalid_argument("monodromy_polygon: base is a branch point");
  std::array<int, 3> perm{};
  for (int l = 0; l < 3; ++l) {
    CurvePoint p = lifts[l];
    for (cplx v : vertices) p = c.continue_straight(p, v);
    p = c.continue_straight(p, base);
    perm[l] = nearest_sheet(lifts, p.yr);
  }
  return perm;
}

std::array<int, 3> monodromy_branch(const CurveModel& c, int j, cplx base) {
  const auto& b = c.branch_points();
  double d = std::abs(base - b[j]);
  for (int i = 0; i < c.num_branch(); ++i)
    if (i != j) d = std::min(d, std::abs(b[i] - b[j]));
  const double rho = 0.25 * d;
  const cplx dir = (base - b[j]) / std::abs(base - b[j]);
  std::vector<cplx> verts;
  // Approach along the ray, circle counter-clockwise on a 32-gon, return along the ray.
  for (int k = 0; k <= 32; ++k) verts.push_back(b[j] + rho * dir * std::polar(1.0, kTwoPi * k / 32));
  return monodromy_polygon(c, base, verts);
}

std::pair<Eigen::MatrixXi, Eigen::MatrixXi> symplectic_reduce(const Eigen::MatrixXi& K) {
  const int n = static_cast<int>(K.rows());
  using Vec = Eigen::VectorXi;
  auto ip = [&](const Vec& u, const Vec& v) { return static_cast<long>(u.dot(K * v)); };
  std::vector<Vec> rest;
  for (int i = 0; i < n; ++i) rest.push_back(Vec::Unit(n, i));
  std::vector<Vec> as, bs;
  while (!rest.empty()) {
    Vec a = rest.front();
    std::vector<Vec> others(rest.begin() + 1, rest.end());
    size_t piv = 0;
    // Euclid on the pairings <a, w> until exactly one partner is left.
    while (true) {
      std::vector<size_t> nz;
      for (size_t i = 0; i < others.size(); ++i)
        if (ip(a, others[i]) != 0) nz.push_back(i);
      if (nz.empty()) throw std::runtime_error("symplectic_reduce: degenerate intersection form");
      piv = *std::min_element(nz.begin(), nz.end(),
                              [&](size_t x, size_t y) { return std::abs(ip(a, others[x])) < std::abs(ip(a, others[y])); });
      const long pv = ip(a, others[piv]);
      bool done = true;
      for (size_t i : nz) {
        if (i == piv) continue;
        const long q = floor_div(ip(a, others[i]), pv);
        others[i] -= static_cast<int>(q) * others[piv];
        if (ip(a, others[i]) != 0) done = false;
      }
      if (done) break;
    }
    Vec b = others[piv];
    others.erase(others.begin() + static_cast<long>(piv));
    if (ip(a, b) == -1) b = -b;
    if (ip(a, b) != 1) throw std::runtime_error("symplectic_reduce: form is not unimodular");
    for (Vec& w : others) {
      const long wb = ip(w, b), wa = ip(w, a);
      w = w - static_cast<int>(wb) * a + static_cast<int>(wa) * b;
    }
    as.push_back(a);
    bs.push_back(b);
    rest = others;
  }
  Eigen::MatrixXi A(as.size(), n), B(bs.size(), n);
  for (size_t i = 0; i < as.size(); ++i) {
    A.row(i) = as[i].transpose();
    B.row(i) = bs[i].transpose();
  }
  return {A, B};
}

HomologyBasis homology_basis(const CurveModel& c) {
  HomologyBasis h;
  const int n = c.num_branch();
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  const auto& b = c.branch_points();
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::make_pair(b[x].real(), b[x].imag()) < std::make_pair(b[y].real(), b[y].imag());
  });
  for (int k = 0; k + 1 < n; ++k) h.edges.emplace_back(order[k], order[k + 1]);
  for (int k = 0; k < static_cast<int>(h.edges.size()); ++k)
    for (int l = 0; l < 2; ++l) h.cycles.emplace_back(k, l);

  // A ray is (edge, sheet, at_end); shared rays are separated by +-eps so that the second
  // cycle's rays never coincide with the first's.
  using Ray = std::tuple<int, int, bool>;
  std::map<Ray, double> angle;
  auto ray = [&](const Ray& r, int pert) {
    auto it = angle.find(r);
    if (it == angle.end()) {
      const auto [k, l, end] = r;
      it = angle.emplace(r, ray_angle(c, h.edges[k].first, h.edges[k].second, l, end)).first;
    }
    const double eps = 1e-7;
    return it->second + pert * (std::get<2>(r) ? -eps : eps);
  };
  // Vertex -> (incoming ray, outgoing ray).
  auto visits = [&](const std::pair<int, int>& cyc) {
    const auto [k, l] = cyc;
    const auto [p0, p1] = h.edges[k];
    std::map<int, std::pair<Ray, Ray>> v;
    v[p1] = {Ray{k, l, true}, Ray{k, (l + 1) % 3, true}};
    v[p0] = {Ray{k, (l + 1) % 3, false}, Ray{k, l, false}};
    return v;
  };
  const int m = static_cast<int>(h.cycles.size());
  h.intersection = Eigen::MatrixXi::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const auto vi = visits(h.cycles[i]);
    for (int j = 0; j < m; ++j) {
      const auto vj = visits(h.cycles[j]);
      int tot = 0;
      for (const auto& [v, rays] : vi) {
        auto it = vj.find(v);
        if (it == vj.end()) continue;
        const double ai = ray(rays.first, 0), ao = ray(rays.second, 0);
        const double bi = ray(it->second.first, 1), bo = ray(it->second.second, 1);
        const bool lin = in_ccw(bi, ao, ai), lout = in_ccw(bo, ao, ai);
        if (!lin && lout) ++tot;
        else if (lin && !lout) --tot;
      }
      h.intersection(i, j) = tot;
    }
  }
  const double det = h.intersection.cast<double>().determinant();
  if (std::lround(std::abs(det)) != 1) throw std::runtime_error("homology_basis: intersection form is not unimodular");
  std::tie(h.a_cycles, h.b_cycles) = symplectic_reduce(h.intersection);
  return h;
}

MatC elementary_periods(const CurveModel& c, const HomologyBasis& h, const std::vector<Differential>& forms) {
  const int nf = static_cast<int>(forms.size());
  MatC E = MatC::Zero(nf, static_cast<long>(h.cycles.size()));
  for (int k = 0; k < static_cast<int>(h.edges.size()); ++k) {
    const auto [p0, p1] = h.edges[k];
    // Entries 2i and 2i+1: the A/(3 y_r) and B/(3 y_s) = B y_r/(3k) parts of form i.
    auto integrand = [&](double t) {
      const EdgeSample s = edge_sample(c, p0, p1, t);
      VecC v(2 * nf);
      for (int i = 0; i < nf; ++i) {
        v[2 * i] = forms[i].A.empty() ? cplx(0.0) : poly_eval(forms[i].A, s.x) / (3.0 * s.yr) * s.dx;
        v[2 * i + 1] = forms[i].B.empty() ? cplx(0.0) : poly_eval(forms[i].B, s.x) * s.yr / (3.0 * s.k) * s.dx;
      }
      return v;
    };
    const VecC I = integrate_adaptive(integrand, 0.0, 1.0);
    for (int l = 0; l < 2; ++l) {
      const long idx = std::find(h.cycles.begin(), h.cycles.end(), std::make_pair(k, l)) - h.cycles.begin();
      // Sheet l multiplies y_r by zeta^l and y_s by zeta^-l.
      const cplx fa = zeta3(-l) - zeta3(-l - 1), fb = zeta3(l) - zeta3(l + 1);
      for (int i = 0; i < nf; ++i) E(i, idx) = fa * I[2 * i] + fb * I[2 * i + 1];
    }
  }
  return E;
}

MatC PeriodData::lattice() const {
  MatC L(genus, 2 * genus);
  L << 2.0 * omega1, 2.0 * omega2;
  return L;
}

double PeriodData::legendre_residual() const {
  const int g = genus;
  MatC M(2 * g, 2 * g);
  M << 2.0 * omega1, 2.0 * omega2, 2.0 * eta1, 2.0 * eta2;
  MatC J = MatC::Zero(2 * g, 2 * g);
  J.block(0, g, g, g) = -MatC::Identity(g, g);
  J.block(g, 0, g, g) = MatC::Identity(g, g);
  return (M * J * M.transpose() - 2.0 * kPi * kI * J).cwiseAbs().maxCoeff();
}

double PeriodData::tau_asymmetry() const { return (tau - tau.transpose()).cwiseAbs().maxCoeff(); }

double PeriodData::min_eig_im_tau() const {
  Eigen::MatrixXd Y = 0.5 * (tau.imag() + tau.imag().transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Y).eigenvalues().minCoeff();
}

PeriodData period_matrices(const FormSet& f) {
  const CurveModel& c = f.curve();
  const int g = c.genus();
  PeriodData pd;
  pd.genus = g;
  pd.homology = homology_basis(c);
  std::vector<Differential> forms = f.first();
  forms.insert(forms.end(), f.second().begin(), f.second().end());
  const MatC E = elementary_periods(c, pd.homology, forms);
  const MatC PA = E * pd.homology.a_cycles.cast<cplx>().transpose();
  const MatC PB = E * pd.homology.b_cycles.cast<cplx>().transpose();
  pd.omega1 = 0.5 * PA.topRows(g);
  pd.omega2 = 0.5 * PB.topRows(g);
  pd.eta1 = 0.5 * PA.bottomRows(g);
  pd.eta2 = 0.5 * PB.bottomRows(g);
  pd.tau = pd.omega1.partialPivLu().solve(pd.omega2);
  pd.shift = VecC::Zero(g);
  for (int j = c.s(); j < c.num_branch(); ++j) {
    CurvePoint B;
    B.x = c.branch_point(j);
    B.branch = j;
    pd.shift += abel_point(f, B);
  }
  pd.delta1 = Eigen::VectorXd::Zero(g);
  pd.delta2 = Eigen::VectorXd::Zero(g);
  return pd;
}

namespace {

// Ray direction from x0 (out of 48) maximising the distance to the other branch points.
cplx ray_direction(const CurveModel& c, cplx x0) {
  double best = -1.0;
  cplx best_d(1.0);
  for (int k = 0; k < 48; ++k) {
    const cplx d = std::polar(1.0, kTwoPi * k / 48 + 0.1);
    double m = 1e300;
    for (cplx b : c.branch_points()) {
      if (std::abs(b - x0) < 1e-14) continue;
      const cplx v = (b - x0) * std::conj(d);
      m = std::min(m, v.real() < 0 ? std::abs(v) : std::abs(v.imag()));
    }
    if (m > best) {
      best = m;
      best_d = d;
    }
  }
  return best_d;
}

}  // namespace

VecC abel_integrals(const CurveModel& c, const std::vector<Differential>& forms, const CurvePoint& P) {
  const int nf = static_cast<int>(forms.size());
  if (P.infinity) return VecC::Zero(nf);
  const cplx x0 = P.x;
  const int jb = P.branch;
  const cplx d = ray_direction(c, x0);
  const auto& b = c.branch_points();
  // x = x0 + d psi(t), psi = phi(t)/(1-t)^3 runs to infinity analytically in the local parameter.
  auto integrand = [&](double t) {
    const double ph = smooth_step(t), s = 1.0 - t;
    const double psi = ph / (s * s * s);
    const double dpsi = smooth_step_deriv(t) / (s * s * s) + 3.0 * ph / (s * s * s * s);
    const cplx x = x0 + d * psi;
    cplx yr = (jb < 0) ? P.yr : cplx(1.0);
    cplx k(1.0);
    for (int i = 0; i < c.num_branch(); ++i) {
      const int e = c.exponent(i);
      if (i == jb) {
        yr *= cbrt_pow(d, e) * std::pow(psi, e / 3.0);
        k *= d * psi;
      } else {
        yr *= cbrt_pow((x - b[i]) / (x0 - b[i]), e);
        if (jb >= 0) yr *= cbrt_pow(x0 - b[i], e);
        k *= x - b[i];
      }
    }
    const cplx dx = d * dpsi;
    VecC v(nf);
    for (int i = 0; i < nf; ++i) {
      cplx val(0.0);
      if (!forms[i].A.empty()) val += poly_eval(forms[i].A, x) / yr;
      if (!forms[i].B.empty()) val += poly_eval(forms[i].B, x) * yr / k;
      v[i] = val / 3.0 * dx;
    }
    return v;
  };
  return -integrate_adaptive(integrand, 0.0, 1.0);
}

VecC abel_point(const FormSet& f, const CurvePoint& P) { return abel_integrals(f.curve(), f.first(), P); }

VecC abel_map(const FormSet& f, const std::vector<CurvePoint>& divisor) {
  VecC acc = VecC::Zero(f.genus());
  for (const auto& p : divisor) acc += abel_point(f, p);
  return acc;
}

VecC shifted_abel_map(const FormSet& f, const PeriodData& pd, const std::vector<CurvePoint>& points) {
  return abel_map(f, points) + pd.shift;
}

Eigen::VectorXd lattice_coordinates(const PeriodData& pd, const VecC& v) {
  const MatC L = pd.lattice();
  const int g = pd.genus;
  Eigen::MatrixXd R(2 * g, 2 * g);
  R << L.real(), L.imag();
  Eigen::VectorXd rhs(2 * g);
  rhs << v.real(), v.imag();
  return R.partialPivLu().solve(rhs);
}

double lattice_residual(const PeriodData& pd, const VecC& v) {
  const Eigen::VectorXd m = lattice_coordinates(pd, v);
  double r = 0.0;
  for (int i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m[i] - std::round(m[i])));
  return r;
}

CurvePoint random_point(const CurveModel& c, std::mt19937_64& rng, double gap) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // Uniform in area on the annulus.
    const double rad = std::sqrt(0.25 + U(rng) * (4.0 - 0.25));
    const cplx x = std::polar(rad, kTwoPi * U(rng));
    bool ok = true;
    for (cplx b : c.branch_points()) ok = ok && std::abs(x - b) >= gap;
    const int sheet = static_cast<int>(U(rng) * 3.0) % 3;
    if (ok) return c.lift_x(x)[sheet];
  }
  throw std::runtime_error("random_point: could not avoid the branch points");
}

CharacteristicSearch find_characteristic(const FormSet& f, PeriodData& pd, std::uint64_t seed, int samples,
                                         double tol) {
  const CurveModel& c = f.curve();
  const int g = c.genus();
  std::mt19937_64 rng(seed);
  std::vector<VecC> zs;
  const MatC A = (2.0 * pd.omega1).inverse();
  for (int t = 0; t < samples; ++t) {
    std::vector<CurvePoint> pts;
    for (int i = 0; i < g - 1; ++i) pts.push_back(random_point(c, rng));
    zs.push_back(A * shifted_abel_map(f, pd, pts));
    if (g == 1) break;  // the only tuple is empty
  }
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(g);
  ThetaSeries th(pd.tau, zero, zero, MatC::Identity(g, g));
  CharacteristicSearch out;
  out.best = 1e300;
  out.runner_up = 1e300;
  for (int bits = 0; bits < (1 << (2 * g)); ++bits) {
    Eigen::VectorXd top(g), bottom(g);
    for (int i = 0; i < g; ++i) {
      top[i] = ((bits >> i) & 1) ? 0.5 : 0.0;
      bottom[i] = ((bits >> (g + i)) & 1) ? 0.5 : 0.0;
    }
    th.set_characteristic(top, bottom);
    double worst = 0.0;
    for (const VecC& z : zs) {
      double ls = 0.0, as = 0.0;
      const cplx v = th.value_at_z(z, &ls, &as);
      worst = std::max(worst, std::abs(v) / as);
      if (worst > tol) break;  // early rejection
    }
    if (worst <= tol) ++out.passing;
    if (worst < out.best) {
      out.runner_up = out.best;
      out.best = worst;
      out.delta2 = top;
      out.delta1 = bottom;
    } else if (worst < out.runner_up) {
      out.runner_up = worst;
    }
  }
  if (out.passing != 1)
    throw std::runtime_error("find_characteristic: " + std::to_string(out.passing) +
                             " candidates pass (expected exactly one)");
  pd.delta1 = out.delta1;
  pd.delta2 = out.delta2;
  pd.has_characteristic = true;
  return out;
}

}  // namespace trig
