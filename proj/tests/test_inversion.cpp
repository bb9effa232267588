#include <doctest.h>

#include <random>

#include "elliptic_oracle.hpp"
#include "trig/config.hpp"
#include "trig/inversion.hpp"

using namespace trig;

namespace {

CurveSetup setup_for(int r, int s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CurveConfig cfg{r, s, random_branch_points(r + s, rng, 0.3)};
  return build_setup(cfg, seed);
}

std::vector<CurvePoint> points(const CurveModel& c, std::mt19937_64& rng, int n) {
  std::vector<CurvePoint> p;
  for (int i = 0; i < n; ++i) p.push_back(random_point(c, rng));
  return p;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("inversion: Frobenius-Stickelberger determinants") {
  std::mt19937_64 rng(71);
  const CurveModel c(1, 2, random_branch_points(3, rng));
  const CurvePoint P = random_point(c, rng), Q = random_point(c, rng), R = random_point(c, rng);
  CHECK(std::abs(fs_det(c, BasisKind::Phi, {P}) - 1.0) < 1e-15);
  for (BasisKind kind : {BasisKind::Phi, BasisKind::PhiHat}) {
    const cplx d = fs_det(c, kind, {P, Q, R});
    CHECK(rel(fs_det(c, kind, {Q, P, R}), -d) < 1e-12);
    CHECK(rel(fs_det(c, kind, {R, P, Q}), d) < 1e-12);
  }
  // A repeated point gives the x-derivative column.
  const MatC M = fs_matrix(c, BasisKind::Phi, {P, P});
  const auto basis = basis_of(c, BasisKind::Phi, 2);
  const double h = 1e-4;
  for (int i = 0; i < 2; ++i) {
    auto phi = [&](cplx x) { return eval_monomial(basis[i], c.continue_straight(P, x)); };
    const cplx fd = (-phi(P.x + 2.0 * h) + 8.0 * phi(P.x + h) - 8.0 * phi(P.x - h) + phi(P.x - 2.0 * h)) / (12.0 * h);
    CHECK(std::abs(M(i, 0) - eval_monomial(basis[i], P)) < 1e-14);
    CHECK(rel(M(i, 1), fd) < 1e-9);
  }
}

TEST_CASE("inversion: mu_n vanishes at its base points and is a ratio of determinants") {
  std::mt19937_64 rng(72);
  for (auto [r, s] : {std::pair{1, 2}, std::pair{0, 4}, std::pair{2, 3}}) {
    const CurveModel c(r, s, random_branch_points(r + s, rng, 0.3));
    for (BasisKind kind : {BasisKind::Phi, BasisKind::PhiHat})
      for (int n = 1; n <= c.genus() + 1; ++n) {
        const auto base = points(c, rng, n);
        const MuFunction mu = mu_function(c, kind, base);
        CHECK(mu.n() == n);
        CHECK(mu.a.back() == cplx(1.0));
        CHECK(mu.mu_coeff(n) == cplx(1.0));
        double scale = 1.0;
        for (cplx a : mu.a) scale = std::max(scale, std::abs(a));
        for (const CurvePoint& p : base) CHECK(std::abs(mu.eval(p)) < 1e-10 * scale);
        const CurvePoint P = random_point(c, rng);
        auto with = base;
        with.push_back(P);
        CHECK(rel(mu.eval(P), fs_det(c, kind, with) / fs_det(c, kind, base)) < 1e-9);
      }
  }
  // For r = 0 the hatted ring is y_rhat times the plain one.
  const CurveModel c(0, 4, random_branch_points(4, rng, 0.3));
  for (int n = 1; n <= 4; ++n) {
    const auto base = points(c, rng, n);
    const MuFunction mu = mu_function(c, BasisKind::Phi, base);
    const MuFunction mh = mu_function(c, BasisKind::PhiHat, base);
    const CurvePoint P = random_point(c, rng);
    CHECK(rel(mh.eval(P), P.yr * mu.eval(P)) < 1e-10);
  }
}

TEST_CASE("inversion: residual divisors of mu_n") {
  std::mt19937_64 rng(73);
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 3}}) {
    const CurveSetup cs = setup_for(r, s, 74 + r);
    const FormSet& f = *cs.forms;
    const CurveModel& c = f.curve();
    const int g = c.genus();
    for (int n = 1; n <= g + 1; ++n) {
      const auto base = points(c, rng, n);
      const auto Q = alpha_map(c, BasisKind::Phi, base);
      CHECK(static_cast<int>(Q.size()) == basis_of(c, BasisKind::Phi, n + 1)[n].weight - n);
      const MuFunction mu = mu_function(c, BasisKind::Phi, base);
      for (const CurvePoint& q : Q) CHECK(std::abs(mu.eval(q)) < 1e-8);
      CHECK(lattice_residual(cs.periods, abel_map(f, base) + abel_map(f, Q)) < 1e-8);

      const auto Qh = alpha_map(c, BasisKind::PhiHat, base);
      CHECK(static_cast<int>(Qh.size()) == basis_of(c, BasisKind::PhiHat, n + 1)[n].weight - n - g - 1);
      VecC w = abel_map(f, base) + abel_map(f, Qh) + 2.0 * cs.periods.shift;
      CHECK(lattice_residual(cs.periods, w) < 1e-8);
    }
  }
}

TEST_CASE("inversion: genus one reduces to wp(w(P)) = y(P)") {
  const CurveSetup cs = build_setup(CurveConfig{0, 2, {0.0, 1.0}}, 1);
  const auto L = oracle::period_lattice(0.0, -1.0);
  REQUIRE(L.has_value());
  const oracle::Weierstrass W(*L);
  std::mt19937_64 rng(75);
  for (int t = 0; t < 10; ++t) {
    const CurvePoint P = random_point(cs.forms->curve(), rng);
    const VecC u = abel_point(*cs.forms, P);
    CHECK(rel(cs.sigma->wp(u)(0, 0), P.yr) < 1e-9);
    CHECK(rel(W.wp(u[0]), P.yr) < 1e-9);
    // du/dx is the holomorphic form: d/dx of the Abel map by central differences.
    const double h = 1e-4;
    auto w = [&](cplx x) { return abel_point(*cs.forms, cs.forms->curve().continue_straight(P, x))[0]; };
    const cplx dudx = (w(P.x + h) - w(P.x - h)) / (2.0 * h);
    CHECK(rel(dudx, cs.forms->first()[0].eval(P)) < 1e-7);
  }
}

TEST_CASE("inversion: Jacobi inversion, vanishing strata and the Riemann relation") {
  for (auto [r, s] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{2, 3}}) {
    const CurveSetup cs = setup_for(r, s, 76 + r);
    const FormSet& f = *cs.forms;
    const CurveModel& c = f.curve();
    const SigmaEvaluator& S = *cs.sigma;
    const int g = c.genus();
    std::mt19937_64 rng(77);
    for (int t = 0; t < 5; ++t) {
      const JacobiReport j = jacobi_check(f, S, points(c, rng, g), random_point(c, rng));
      CHECK(j.part1 < 1e-8);
      CHECK(j.part2 < 1e-8);
      CHECK(riemann_fundamental_check(f, S, points(c, rng, g), random_point(c, rng)) < 1e-8);
    }
    for (int k = 1; k <= g; ++k) {
      const VanishingReport v = vanishing_check(f, S, points(c, rng, k));
      CHECK(v.k == k);
      if (k == g || v.rank == 1) CHECK(v.ratio < 1e-8);
      if (k < g) {
        CHECK(v.sigma_rel < 1e-9);
        CHECK(v.low_order < 1e-8);
        CHECK(v.directional < 1e-8);
      }
    }
    CHECK(vector_field_check(f, S, points(c, rng, g)) < 1e-6);
  }
}

TEST_CASE("inversion: special base divisors are rejected") {
  std::mt19937_64 rng(78);
  const CurveModel c(1, 2, random_branch_points(3, rng));
  // The fibre of x is the divisor of x - x0, so mu_3 through it is not unique.
  const auto fibre = c.lift_x(cplx(0.3, 1.7));
  CHECK_THROWS_AS(mu_function(c, BasisKind::Phi, {fibre[0], fibre[1], fibre[2]}), std::domain_error);
}
