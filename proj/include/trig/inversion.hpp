#pragma once

#include <vector>

#include "trig/sigma.hpp"

namespace trig {

enum class BasisKind { Phi, PhiHat };

std::vector<Monomial> basis_of(const CurveModel& c, BasisKind kind, int count);

// (phi_i(P_j)), i = 0..n-1, columns follow the points. A point repeated m times contributes
// its Taylor columns d^k/dx^k phi_i / k!, k = 0..m-1 (the confluent limit).
MatC fs_matrix(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& points);
cplx fs_det(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& points);

// mu_n(P) = phi_n(P) + sum_{k<n} a_k phi_k(P), vanishing at the n base points.
// mu_{n,k} = (-1)^(n-k) a_k.
struct MuFunction {
  BasisKind kind = BasisKind::Phi;
  std::vector<Monomial> basis;  // phi_0..phi_n
  std::vector<cplx> a;          // a_0..a_n with a_n = 1
  int n() const { return static_cast<int>(a.size()) - 1; }
  cplx mu_coeff(int k) const;   // mu_{n,k}
  cplx eval(const CurvePoint& p) const;
};

// Throws when the base tuple is special (|psi_n| below 1e-8 of its scale).
MuFunction mu_function(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& base);

// Residual zeros Q_1..Q_m of mu_n (Phi: m = N(n) - n) or of alpha-hat_n = mu-hat_n dx/(3 y_r y_s)
// (PhiHat: m = N-hat(n) - n - g - 1), found from the norm a^3 + b^3 f_r + c^3 f_s - 3abck of
// mu = a + b y_r + c y_s.
std::vector<CurvePoint> alpha_map(const CurveModel& c, BasisKind kind, const std::vector<CurvePoint>& base);

struct JacobiReport {
  double part1 = 0.0;          // max |mu-hat_g(P) - (phi-hat_g(P) - sum_j wp_gj phi-hat_{j-1}(P))| (relative)
  double part2 = 0.0;          // max |wp_{g,k+1} + a_k| (relative): the sign implied by part 1
  double part2_printed = 0.0;  // same with wp_{g,k+1} = (-1)^(g-k) mu-hat_{g,k}
};

// u = w_s(P_1..P_g); part 1 is evaluated at `probe`.
JacobiReport jacobi_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts,
                          const CurvePoint& probe);

struct VanishingReport {
  int k = 0;
  int rank = 0;               // n_k
  int N = 0;                  // N_k
  // 1 <= k < g with n_k = 1: max |sigma_{sharp(i)}/sigma_sharp - expected| over i = 1..g, expected
  // (-1)^(k-i+1) mu-hat_{k,i-1} for i <= k, 1 for i = k+1, 0 above.
  // k = g: max |(sigma_i sigma_g - sigma_gi sigma)/sigma^2 - (-1)^(g-i) mu-hat_{g,i-1}|.
  double ratio = 0.0;
  // The printed variants: k = 1 against +phi-hat_1/phi-hat_0(P_1); k = g with sign (-1)^(s+r-i).
  double ratio_printed = 0.0;
  double low_order = 0.0;     // max over partials of order < n_k, relative to |sigma_sharp|
  double directional = 0.0;   // max_{l < N_k} |d_g^l sigma| / |d_g^{N_k} sigma|
  double sigma_rel = 0.0;     // |sigma| relative to the theta term scale
};

// u = w_s(P_1..P_k) for 1 <= k <= g. Ratios are relative to max(1, |expected|).
VanishingReport vanishing_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts);

double riemann_fundamental_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts,
                                 const CurvePoint& P);

// Chain rule d/du = (Psi-hat^T)^-1 (3 y_r y_s d/dx) applied to sigma at u = w_s(P_1..P_g): the
// analytic gradient against central differences of sigma(w_s) in each x_a. Relative residual.
double vector_field_check(const FormSet& f, const SigmaEvaluator& S, const std::vector<CurvePoint>& pts);

}  // namespace trig
