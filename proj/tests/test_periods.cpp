#include <doctest.h>

#include <random>

#include "elliptic_oracle.hpp"
#include "trig/config.hpp"
#include "trig/periods.hpp"
#include "trig/verify.hpp"

using namespace trig;

namespace {

struct Case {
  int r, s;
};
const Case kCases[] = {{0, 2}, {1, 2}, {0, 4}, {1, 3}, {2, 3}};

CurveModel random_curve(int r, int s, std::mt19937_64& rng) {
  return CurveModel(r, s, random_branch_points(r + s, rng, 0.3));
}

int sheet_of(const std::vector<CurvePoint>& lifts, cplx yr) {
  int best = 0;
  for (int l = 1; l < 3; ++l)
    if (std::abs(lifts[l].yr - yr) < std::abs(lifts[best].yr - yr)) best = l;
  return best;
}

// Lift l goes to the lift with y_rhat multiplied by zeta^power.
std::array<int, 3> rotation(const std::vector<CurvePoint>& lifts, int power) {
  std::array<int, 3> p{};
  for (int l = 0; l < 3; ++l) p[l] = sheet_of(lifts, lifts[l].yr * zeta3(power));
  return p;
}

}  // namespace

TEST_CASE("periods: local monodromy multiplies y_rhat by zeta^e") {
  std::mt19937_64 rng(21);
  for (const Case& k : kCases) {
    const CurveModel c = random_curve(k.r, k.s, rng);
    const cplx base(0.05, 3.3);
    const auto lifts = c.lift_x(base);
    for (int j = 0; j < c.num_branch(); ++j) {
      const auto p = monodromy_branch(c, j, base);
      CHECK(p == rotation(lifts, c.exponent(j)));
      // A three-cycle: no lift is fixed.
      for (int l = 0; l < 3; ++l) CHECK(p[l] != l);
    }
    // A large square encloses everything: the total exponent is rhat.
    const std::vector<cplx> big{{5.0, 3.3}, {5.0, -5.0}, {-5.0, -5.0}, {-5.0, 5.0}, {5.0, 5.0}};
    // Clockwise from the base, so the inverse rotation.
    CHECK(monodromy_polygon(c, base, big) == rotation(lifts, 3 - c.r_hat() % 3));
    // A small loop around nothing is trivial.
    const std::vector<cplx> tiny{base + 0.1, base + cplx(0.1, 0.1), base + cplx(0.0, 0.1)};
    CHECK(monodromy_polygon(c, base, tiny) == std::array<int, 3>{0, 1, 2});
  }
}

TEST_CASE("periods: homology basis is symplectic") {
  std::mt19937_64 rng(22);
  for (const Case& k : kCases) {
    const CurveModel c = random_curve(k.r, k.s, rng);
    const HomologyBasis h = homology_basis(c);
    const int g = c.genus();
    CHECK(h.a_cycles.rows() == g);
    CHECK(h.b_cycles.rows() == g);
    const Eigen::MatrixXi& K = h.intersection;
    CHECK(K == -K.transpose());
    const Eigen::MatrixXi A = h.a_cycles, B = h.b_cycles;
    CHECK((A * K * A.transpose()).isZero());
    CHECK((B * K * B.transpose()).isZero());
    CHECK(A * K * B.transpose() == Eigen::MatrixXi::Identity(g, g));
  }
}

TEST_CASE("periods: Legendre relation and Riemann bilinear relations") {
  std::mt19937_64 rng(23);
  for (const Case& k : kCases)
    for (int rep = 0; rep < 2; ++rep) {
      const FormSet f(random_curve(k.r, k.s, rng));
      const PeriodData pd = period_matrices(f);
      CHECK(pd.legendre_residual() < 1e-9);
      CHECK(pd.tau_asymmetry() < 1e-10);
      CHECK(pd.min_eig_im_tau() > 0.0);
    }
}

TEST_CASE("periods: genus one lattice equals the Weierstrass lattice") {
  const FormSet f(CurveModel(0, 2, {0.0, 1.0}));
  const PeriodData pd = period_matrices(f);
  const auto L = oracle::period_lattice(0.0, -1.0);
  REQUIRE(L.has_value());
  // Express 2 omega' and 2 omega'' in the oracle basis; the change of basis must be unimodular.
  Eigen::Matrix2d W;
  W << L->w1.real(), L->w2.real(), L->w1.imag(), L->w2.imag();
  Eigen::Matrix2d M;
  const cplx ours[2] = {2.0 * pd.omega1(0, 0), 2.0 * pd.omega2(0, 0)};
  for (int col = 0; col < 2; ++col) M.col(col) = W.inverse() * Eigen::Vector2d(ours[col].real(), ours[col].imag());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(M(i, j) - std::round(M(i, j))) < 1e-10);
  CHECK(std::abs(std::abs(M.determinant()) - 1.0) < 1e-10);
  // tau is in the SL2(Z) orbit of exp(2 pi i / 3).
  const oracle::Lattice red = oracle::reduce(ours[0], ours[1]);
  CHECK(std::abs(red.tau() - std::polar(1.0, 2.0 * oracle::kPi / 3.0)) < 1e-10);
}

TEST_CASE("periods: Abel map") {
  std::mt19937_64 rng(24);
  for (const Case& k : kCases) {
    const FormSet f(random_curve(k.r, k.s, rng));
    const CurveModel& c = f.curve();
    const PeriodData pd = period_matrices(f);
    CHECK(abel_map(f, {}).norm() == 0.0);
    CHECK(principal_divisor_residual(f, pd) < 1e-9);
    if (c.r() == 0) CHECK(pd.shift.norm() == 0.0);
    for (int t = 0; t < 5; ++t) {
      // A full fibre is the divisor of x - x0 plus 3 infinity.
      const CurvePoint P = random_point(c, rng);
      CHECK(lattice_residual(pd, abel_map(f, c.lift_x(P.x))) < 1e-9);
      // Integration along a segment agrees with the ray-based Abel map up to periods.
      const cplx x = random_point(c, rng).x;
      bool clear = true;
      for (cplx b : c.branch_points()) {
        // Distance from b to the segment.
        const cplx d = x - P.x;
        const double s = std::clamp(((b - P.x) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
        clear = clear && std::abs(P.x + s * d - b) > 0.05;
      }
      if (!clear) continue;
      const CurvePoint Q = c.continue_straight(P, x);
      const VecC seg = segment_integrals(c, f.first(), P, x);
      CHECK(lattice_residual(pd, abel_point(f, Q) - abel_point(f, P) - seg) < 1e-9);
    }
  }
}

TEST_CASE("periods: theta characteristic") {
  {
    const FormSet f(CurveModel(0, 2, {0.0, 1.0}));
    PeriodData pd = period_matrices(f);
    const CharacteristicSearch cs = find_characteristic(f, pd, 1);
    CHECK(cs.passing == 1);
    CHECK(pd.has_characteristic);
    CHECK(std::abs(pd.delta1[0] - 0.5) < 1e-15);
    CHECK(std::abs(pd.delta2[0] - 0.5) < 1e-15);
  }
  std::mt19937_64 rng(25);
  for (const Case& k : {Case{1, 2}, Case{0, 4}, Case{2, 3}}) {
    const FormSet f(random_curve(k.r, k.s, rng));
    PeriodData pd = period_matrices(f);
    const CharacteristicSearch cs = find_characteristic(f, pd, 7);
    CHECK(cs.passing == 1);
    CHECK(cs.best < 1e-6);
    CHECK(cs.runner_up > 1e3 * cs.best);
    // Entries are half-integers.
    for (int i = 0; i < f.genus(); ++i) {
      CHECK(std::abs(2.0 * pd.delta1[i] - std::round(2.0 * pd.delta1[i])) < 1e-15);
      CHECK(std::abs(2.0 * pd.delta2[i] - std::round(2.0 * pd.delta2[i])) < 1e-15);
    }
  }
}
