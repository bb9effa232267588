#include "trig/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace trig {

using nlohmann::json;

namespace {

struct Accumulator {
  CheckResult r;
  Accumulator(std::string check, std::string name, double target) {
    r.check = std::move(check);
    r.name = std::move(name);
    r.target = target;
  }
  void add(double residual) {
    ++r.samples;
    // NaN must not pass silently.
    if (!(residual <= r.max_residual)) r.max_residual = std::isnan(residual) ? INFINITY : residual;
  }
  CheckResult done() {
    r.pass = r.samples > 0 && r.max_residual < r.target;
    return r;
  }
};

std::vector<CurvePoint> sample_points(const CurveModel& c, std::mt19937_64& rng, int n) {
  std::vector<CurvePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_point(c, rng));
  return pts;
}

// Retries `body` on fresh samples when a random tuple lands on a special divisor or the theta
// divisor (probability zero, but numerically possible near it).
void sampled(int samples, const std::function<void()>& body) {
  int done = 0;
  for (int attempt = 0; done < samples && attempt < 4 * samples; ++attempt) {
    try {
      body();
      ++done;
    } catch (const std::domain_error&) {
    }
  }
  if (done < samples) throw std::runtime_error("verification: too many degenerate samples");
}

void omega_checks(const CurveSetup& s, double precision, std::mt19937_64& rng, std::vector<CheckResult>& out) {
  const FormSet& f = *s.forms;
  const CurveModel& c = f.curve();
  Accumulator sym("omega", "omega_symmetry", precision);
  Accumulator exch("omega", "exchange_identity", precision);
  Accumulator diag("omega", "omega_diagonal", std::max(precision, 1e-6));
  for (int t = 0; t < 100; ++t) {
    const CurvePoint P = random_point(c, rng), Q = random_point(c, rng);
    const cplx a = f.omega(P, Q), b = f.omega(Q, P);
    sym.add(std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    const cplx l = f.exchange_lhs(P, Q), r = f.exchange_rhs(P, Q);
    exch.add(std::abs(l - r) / std::max(1.0, std::abs(l) + std::abs(r)));
    diag.add(omega_diagonal_residual(f, P, 1e-4));
  }
  out.push_back(sym.done());
  out.push_back(exch.done());
  out.push_back(diag.done());
}

void legendre_checks(const CurveSetup& s, double precision, std::vector<CheckResult>& out) {
  const PeriodData& pd = s.periods;
  Accumulator leg("legendre", "legendre_relation", precision);
  leg.add(pd.legendre_residual());
  out.push_back(leg.done());
  Accumulator sym("legendre", "tau_symmetry", precision);
  sym.add(pd.tau_asymmetry());
  out.push_back(sym.done());
  // Positive definiteness: the residual is how far the smallest eigenvalue is from positive.
  Accumulator pos("legendre", "im_tau_positive", 1e-300);
  pos.add(pd.min_eig_im_tau() > 0.0 ? 0.0 : 1.0 - pd.min_eig_im_tau());
  out.push_back(pos.done());
  Accumulator prin("legendre", "principal_divisor", precision);
  prin.add(principal_divisor_residual(*s.forms, pd));
  out.push_back(prin.done());
}

void schur_checks(const CurveSetup& s, std::uint64_t seed, std::vector<CheckResult>& out) {
  const double eps = 1e-2;
  Accumulator sch("schur", "schur_leading_term", 10.0 * eps);
  sch.add(s.sigma->scaling_limit_error(s.schur, s.weights, s.diagram.size(), -s.periods.shift, eps, 20, seed));
  sch.r.samples = 20;
  out.push_back(sch.done());
}

void inversion_checks(const CurveSetup& s, double precision, std::mt19937_64& rng, std::vector<CheckResult>& out) {
  const FormSet& f = *s.forms;
  const CurveModel& c = f.curve();
  const int g = f.genus();
  const SigmaEvaluator& S = *s.sigma;
  Accumulator j1("inversion", "jacobi_part1", precision);
  Accumulator j2("inversion", "jacobi_part2", precision);
  sampled(20, [&] {
    const auto pts = sample_points(c, rng, g);
    const JacobiReport r = jacobi_check(f, S, pts, random_point(c, rng));
    j1.add(r.part1);
    j2.add(r.part2);
  });
  out.push_back(j1.done());
  out.push_back(j2.done());

  Accumulator rf("inversion", "riemann_fundamental", precision);
  sampled(10, [&] { rf.add(riemann_fundamental_check(f, S, sample_points(c, rng, g), random_point(c, rng))); });
  out.push_back(rf.done());

  Accumulator vf("inversion", "vector_field", std::max(precision, 1e-6));
  sampled(5, [&] { vf.add(vector_field_check(f, S, sample_points(c, rng, g))); });
  out.push_back(vf.done());

  for (BasisKind kind : {BasisKind::Phi, BasisKind::PhiHat}) {
    Accumulator al("inversion", kind == BasisKind::Phi ? "alpha_map" : "alpha_hat_map", precision);
    for (int n = 1; n <= g + 1; ++n)
      sampled(2, [&] {
        const auto base = sample_points(c, rng, n);
        const auto Q = alpha_map(c, kind, base);
        VecC w = abel_map(f, base) + abel_map(f, Q);
        if (kind == BasisKind::PhiHat) w += 2.0 * s.periods.shift;
        al.add(lattice_residual(s.periods, w));
      });
    out.push_back(al.done());
  }
}

void vanishing_checks(const CurveSetup& s, double precision, std::mt19937_64& rng, std::vector<CheckResult>& out) {
  const FormSet& f = *s.forms;
  const CurveModel& c = f.curve();
  const int g = f.genus();
  const SigmaEvaluator& S = *s.sigma;
  Accumulator td("vanishing", "theta_divisor", precision);
  for (int t = 0; t < 20; ++t)
    td.add(S.relative_magnitude(shifted_abel_map(f, s.periods, sample_points(c, rng, g - 1))));
  out.push_back(td.done());

  Accumulator ratio("vanishing", "stratum_ratios", precision);
  Accumulator low("vanishing", "low_order_partials", precision);
  Accumulator dir("vanishing", "directional_orders", precision);
  for (int k = 1; k <= g; ++k)
    sampled(5, [&] {
      const VanishingReport r = vanishing_check(f, S, sample_points(c, rng, k));
      if (k == g || r.rank == 1) ratio.add(r.ratio);
      if (k < g) {
        low.add(r.low_order);
        dir.add(r.directional);
      }
    });
  out.push_back(ratio.done());
  if (g > 1) {
    out.push_back(low.done());
    out.push_back(dir.done());
  }
}

}  // namespace

json to_json(const CheckResult& r, const CurveConfig& cfg) {
  return {{"check", r.check},       {"name", r.name},     {"curve", to_json(cfg)}, {"samples", r.samples},
          {"max_residual", r.max_residual}, {"target", r.target}, {"pass", r.pass}};
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{"omega", "legendre", "schur", "inversion", "vanishing"};
  return groups;
}

std::vector<CheckResult> run_checks(const CurveSetup& setup, const std::string& which, double precision,
                                    std::uint64_t seed) {
  const auto& groups = check_groups();
  if (which != "all" && std::find(groups.begin(), groups.end(), which) == groups.end())
    throw std::invalid_argument("unknown check: " + which);
  std::vector<CheckResult> out;
  // One stream per group, so a group's samples do not depend on which others run.
  auto want = [&](const char* g) { return which == "all" || which == g; };
  if (want("omega")) {
    std::mt19937_64 rng(seed);
    omega_checks(setup, precision, rng, out);
  }
  if (want("legendre")) legendre_checks(setup, precision, out);
  if (want("schur")) schur_checks(setup, seed, out);
  if (want("inversion")) {
    std::mt19937_64 rng(seed + 1);
    inversion_checks(setup, precision, rng, out);
  }
  if (want("vanishing")) {
    std::mt19937_64 rng(seed + 2);
    vanishing_checks(setup, precision, rng, out);
  }
  return out;
}

double omega_diagonal_residual(const FormSet& f, const CurvePoint& P, double h) {
  const cplx d = h * std::polar(1.0, 0.7);
  const CurvePoint Q = f.curve().continue_straight(P, P.x + d);
  return std::abs(d * d * f.omega(P, Q) - 1.0);
}

double principal_divisor_residual(const FormSet& f, const PeriodData& pd) {
  const CurveModel& c = f.curve();
  VecC v = VecC::Zero(c.genus());
  for (int j = 0; j < c.num_branch(); ++j) {
    CurvePoint B;
    B.x = c.branch_point(j);
    B.branch = j;
    v += static_cast<double>(c.exponent(j)) * abel_point(f, B);
  }
  return lattice_residual(pd, v);
}

}  // namespace trig
