// Acceptance run: one PASS/FAIL line per criterion with its worst residual, its target and the
// wall time, which is checked against the criterion's budget. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "elliptic_oracle.hpp"
#include "trig/verify.hpp"

using namespace trig;

namespace {

struct Outcome {
  double residual = 0.0;
  double target = 0.0;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

CurveSetup random_setup(int r, int s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return build_setup(CurveConfig{r, s, random_branch_points(r + s, rng, 0.3)}, seed);
}

CurveSetup fixed_setup(int r, int s) {
  if (r == 1 && s == 2) return build_setup(CurveConfig{1, 2, {{0.83, 0.41}, {-0.62, 1.17}, {-1.05, -0.58}}}, 1);
  return build_setup(
      CurveConfig{2, 3, {{1.12, 0.27}, {-0.35, 0.94}, {-1.41, -0.22}, {0.18, -1.36}, {0.71, -0.63}}}, 1);
}

std::vector<CurvePoint> points(const CurveModel& c, std::mt19937_64& rng, int n) {
  std::vector<CurvePoint> p;
  for (int i = 0; i < n; ++i) p.push_back(random_point(c, rng));
  return p;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome genus_one_oracle() {
  const CurveSetup s = build_setup(CurveConfig{0, 2, {0.0, 1.0}}, 1);
  const auto L = oracle::period_lattice(0.0, -1.0);
  if (!L) return {INFINITY, 1e-8, "oracle lattice not found"};
  const oracle::Weierstrass W(*L);
  const cplx w1 = 2.0 * s.periods.omega1(0, 0), w2 = 2.0 * s.periods.omega2(0, 0);
  // tau up to SL2(Z): compare the reduced representatives.
  double worst = std::abs(oracle::reduce(w1, w2).tau() - L->tau());
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) {
      VecC u(1);
      u[0] = ((j + 0.5) / 5.0 - 0.5) * w1 + ((k + 0.5) / 5.0 - 0.5) * w2 + cplx(0.01, 0.02);
      worst = std::max({worst, rel(s.sigma->sigma(u), W.sigma(u[0])), rel(s.sigma->wp(u)(0, 0), W.wp(u[0]))});
    }
  return {worst, 1e-8, "tau, sigma, wp on a 5x5 grid"};
}

Outcome legendre() {
  double worst = 0.0;
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}})
    for (std::uint64_t seed : {101, 102, 103}) {
      std::mt19937_64 rng(seed);
      const FormSet f(CurveModel(r, s, random_branch_points(r + s, rng, 0.3)));
      worst = std::max(worst, period_matrices(f).legendre_residual());
    }
  return {worst, 1e-6, "<3,4,5> and <3,7,8>, 3 branch sets each"};
}

Outcome omega_symmetry() {
  double sym = 0.0, diag = 0.0;
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const CurveSetup cs = fixed_setup(r, s);
    const FormSet& f = *cs.forms;
    std::mt19937_64 rng(201);
    for (int t = 0; t < 100; ++t) {
      const CurvePoint P = random_point(f.curve(), rng), Q = random_point(f.curve(), rng);
      sym = std::max(sym, rel(f.omega(P, Q), f.omega(Q, P)));
      diag = std::max(diag, omega_diagonal_residual(f, P, 1e-4));
    }
  }
  // Two targets: report the worse of the two ratios against a unit target.
  const double score = std::max(sym / 1e-9, diag / 1e-6);
  return {score, 1.0, fmt("symmetry %.2e (< 1e-9), diagonal %.2e (< 1e-6); residual is max ratio", sym, diag)};
}

Outcome kernel_identity() {
  const CurveSetup cs = fixed_setup(1, 2);
  const FormSet& f = *cs.forms;
  const CurveModel& c = f.curve();
  const BiPoly l = kernel_identity_lhs(c), r = kernel_identity_rhs(c);
  std::mt19937_64 rng(301);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const CurvePoint P = random_point(c, rng), Q = random_point(c, rng);
    const cplx a = f.exchange_lhs(P, Q), b = f.exchange_rhs(P, Q);
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a) + std::abs(b)));
    const cplx pl = l.eval(P.x, Q.x), pr = r.eval(P.x, Q.x);
    worst = std::max(worst, std::abs(pl - pr) / std::max(1.0, std::abs(pl)));
  }
  return {worst, 1e-8, "exchange identity and its polynomial identity, 50 pairs on <3,4,5>"};
}

Outcome quasi_periodicity() {
  double worst = 0.0, printed = 0.0;
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const CurveSetup cs = fixed_setup(r, s);
    const SigmaEvaluator& S = *cs.sigma;
    const int g = S.genus();
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    std::uniform_int_distribution<int> I(-2, 2);
    const MatC L = S.periods().lattice();
    for (int t = 0; t < 20; ++t) {
      VecC u = VecC::Zero(g);
      for (int k = 0; k < 2 * g; ++k) u += U(rng) * L.col(k);
      Eigen::VectorXi l1(g), l2(g);
      for (int i = 0; i < g; ++i) {
        l1[i] = I(rng);
        l2[i] = I(rng);
      }
      worst = std::max(worst, S.quasi_periodicity_residual(u, l1, l2));
      printed = std::max(printed, S.quasi_periodicity_residual(u, l1, l2, +1));
    }
  }
  return {worst, 1e-6, fmt("sign exp(-L); the printed exp(+L) gives %.2e", printed)};
}

Outcome schur_leading_term() {
  const CurveSetup cs = fixed_setup(1, 2);
  const SigmaEvaluator& S = *cs.sigma;
  const double eps = 1e-2;
  const VecC zero = VecC::Zero(2);
  const double literal = S.scaling_limit_error(cs.schur, cs.weights, cs.diagram.size(), zero, eps, 20, 501);
  const double shifted =
      S.scaling_limit_error(cs.schur, cs.weights, cs.diagram.size(), -cs.periods.shift, eps, 20, 501);
  return {literal, 10.0 * eps,
          fmt("at u = 0 as stated; at u = -w(B_3) the error is %.2e (see README)", shifted)};
}

Outcome jacobi() {
  double score = 0.0;
  std::string note;
  for (auto [r, s, target] : {std::tuple{1, 2, 1e-6}, std::tuple{2, 3, 1e-5}}) {
    const CurveSetup cs = fixed_setup(r, s);
    const FormSet& f = *cs.forms;
    std::mt19937_64 rng(601);
    double worst = 0.0, printed = 0.0;
    for (int t = 0; t < 20; ++t) {
      const JacobiReport j = jacobi_check(f, *cs.sigma, points(f.curve(), rng, f.genus()), random_point(f.curve(), rng));
      worst = std::max({worst, j.part1, j.part2});
      printed = std::max(printed, j.part2_printed);
    }
    score = std::max(score, worst / target);
    note += fmt("g=%.0f: %.2e; ", f.genus(), worst);
    if (r == 2) note += fmt("printed sign in part 2 gives %.2e; residual is max ratio to target", printed);
  }
  return {score, 1.0, note};
}

Outcome vanishing() {
  double theta = 0.0;
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const CurveSetup cs = fixed_setup(r, s);
    const FormSet& f = *cs.forms;
    std::mt19937_64 rng(701);
    for (int t = 0; t < 20; ++t)
      theta = std::max(theta, cs.sigma->relative_magnitude(
                                  shifted_abel_map(f, cs.periods, points(f.curve(), rng, f.genus() - 1))));
  }
  const CurveSetup cs = fixed_setup(1, 2);
  const FormSet& f = *cs.forms;
  std::mt19937_64 rng(702);
  double ratio = 0.0, printed = 0.0;
  for (int k = 1; k <= f.genus(); ++k)
    for (int t = 0; t < 10; ++t) {
      const VanishingReport v = vanishing_check(f, *cs.sigma, points(f.curve(), rng, k));
      ratio = std::max(ratio, v.ratio);
      printed = std::max(printed, v.ratio_printed);
    }
  const double score = std::max(theta / 1e-6, ratio / 1e-5);
  return {score, 1.0,
          fmt("sigma on w_s(S^(g-1)) %.2e (< 1e-6), stratum ratios %.2e (< 1e-5)", theta, ratio) +
              fmt("; printed signs give %.2e; residual is max ratio to target", printed)};
}

Outcome residues() {
  double worst = 0.0;
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const CurveSetup cs = fixed_setup(r, s);
    const CurveModel& c = cs.forms->curve();
    std::mt19937_64 rng(801);
    for (int t = 0; t < 3; ++t) {
      const CurvePoint P1 = random_point(c, rng), P2 = random_point(c, rng);
      auto pi = [&](const CurvePoint& P) { return third_kind(c, P, P1, P2); };
      worst = std::max(worst, std::abs(loop_residue(c, pi, P1, {P2.x}) - 1.0));
      worst = std::max(worst, std::abs(loop_residue(c, pi, P2, {P1.x}) + 1.0));
    }
  }
  return {worst, 1e-8, "third-kind differential on <3,4,5> and <3,7,8>"};
}

Outcome principality() {
  double worst = 0.0;
  for (auto [r, s] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
    const CurveSetup cs = random_setup(r, s, 901);
    worst = std::max(worst, principal_divisor_residual(*cs.forms, cs.periods));
  }
  return {worst, 1e-6, "lattice coordinates of sum e_j w(B_j)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "genus-one oracle", 10, genus_one_oracle},
      {2, "generalized Legendre relation", 240, legendre},
      {3, "Omega symmetry and diagonal normalization", 30, omega_symmetry},
      {4, "second-kind polynomial identity", 30, kernel_identity},
      {5, "quasi-periodicity", 60, quasi_periodicity},
      {6, "Schur leading term", 60, schur_leading_term},
      {7, "Jacobi inversion", 300, jacobi},
      {8, "vanishing theorems", 300, vanishing},
      {9, "third-kind residues", 10, residues},
      {10, "Abel-map principality", 60, principality},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {INFINITY, 0.0, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.residual < o.target && secs < c.budget_s;
    failed += !pass;
    std::printf("%s  %2d  %-44s residual %.3e  target %.1e  time %7.2f s (budget %g s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title, o.residual, o.target, secs, c.budget_s);
    if (!o.note.empty()) std::printf("          %s\n", o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
