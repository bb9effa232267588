#pragma once

// Classical Weierstrass functions for Y^2 = 4X^3 - g2 X - g3, built only from complex AGM,
// q-series and Eisenstein series. y^3 = x^2 - x maps to Y^2 = 4X^3 + 1 by X = y, Y = 2x - 1,
// and dx/(3y^2) = dX/Y, so the genus-one sigma function of the trigonal model is the
// Weierstrass sigma function with (g2, g3) = (0, -1) and wp_11(u) = wp(u).

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

inline cplx agm(cplx a, cplx b) {
  for (int it = 0; it < 100 && std::abs(a - b) > 1e-16 * std::abs(a); ++it) {
    const cplx an = 0.5 * (a + b);
    cplx bn = std::sqrt(a * b);
    // Optimal choice of square root.
    if (std::abs(an - bn) > std::abs(an + bn)) bn = -bn;
    a = an;
    b = bn;
  }
  return a;
}

struct Lattice {
  cplx w1, w2;  // full periods, Im(w2/w1) > 0, tau reduced to the fundamental domain
  cplx tau() const { return w2 / w1; }
};

inline Lattice reduce(cplx w1, cplx w2) {
  if ((w2 / w1).imag() < 0) w2 = -w2;
  for (int it = 0; it < 100; ++it) {
    const double n = std::round((w2 / w1).real());
    w2 -= n * w1;
    if (std::abs(w2 / w1) < 1.0 - 1e-14) {
      const cplx t = w1;
      w1 = w2;
      w2 = -t;
    } else {
      break;
    }
  }
  return {w1, w2};
}

// g2 = (4 pi^4 / 3) E4 / w1^4 and g3 = (8 pi^6 / 27) E6 / w1^6 for the lattice Z w1 + Z w2.
inline std::array<cplx, 2> invariants(const Lattice& L) {
  const cplx q = std::exp(2.0 * kPi * cplx(0, 1) * L.tau());
  cplx e4 = 1.0, e6 = 1.0, qn = 1.0;
  for (int n = 1; n <= 80; ++n) {
    qn *= q;
    double s3 = 0.0, s5 = 0.0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        s3 += std::pow(d, 3);
        s5 += std::pow(d, 5);
      }
    e4 += 240.0 * s3 * qn;
    e6 -= 504.0 * s5 * qn;
  }
  const double p4 = std::pow(kPi, 4), p6 = std::pow(kPi, 6);
  return {4.0 * p4 / 3.0 * e4 / std::pow(L.w1, 4), 8.0 * p6 / 27.0 * e6 / std::pow(L.w1, 6)};
}

// The period lattice of Y^2 = 4X^3 - g2 X - g3. AGM branch choices are tried exhaustively and
// the candidate is accepted only when its Eisenstein invariants reproduce (g2, g3).
inline std::optional<Lattice> period_lattice(cplx g2, cplx g3, double tol = 1e-11) {
  // Roots of 4X^3 - g2 X - g3 by Durand-Kerner.
  std::array<cplx, 3> e{cplx(0.4, 0.9), cplx(-0.7, 0.3), cplx(0.2, -0.8)};
  for (int it = 0; it < 500; ++it)
    for (int i = 0; i < 3; ++i) {
      cplx den = 4.0;
      for (int j = 0; j < 3; ++j)
        if (j != i) den *= e[i] - e[j];
      e[i] -= (4.0 * e[i] * e[i] * e[i] - g2 * e[i] - g3) / den;
    }
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) {
    const cplx e1 = e[p[0]], e2 = e[p[1]], e3 = e[p[2]];
    const cplx a = std::sqrt(e1 - e3);
    for (double sb : {1.0, -1.0})
      for (double sc : {1.0, -1.0}) {
        const cplx b = sb * std::sqrt(e1 - e2), c = sc * std::sqrt(e2 - e3);
        const Lattice L = reduce(kPi / agm(a, b), cplx(0, 1) * kPi / agm(a, c));
        const auto inv = invariants(L);
        const double scale = 1.0 + std::abs(g2) + std::abs(g3);
        if (std::abs(inv[0] - g2) < tol * scale && std::abs(inv[1] - g3) < tol * scale) return L;
      }
  }
  return std::nullopt;
}

// Weierstrass functions from the half-period q-series (omega1 = w1/2, omega3 = w2/2,
// q = exp(i pi tau)).
struct Weierstrass {
  Lattice L;
  cplx omega1, omega3, q, eta1;

  explicit Weierstrass(const Lattice& lat) : L(lat) {
    omega1 = 0.5 * L.w1;
    omega3 = 0.5 * L.w2;
    q = std::exp(kPi * cplx(0, 1) * L.tau());
    cplx s = 0.0;
    for (int n = 1; n <= 80; ++n) {
      const cplx q2n = std::pow(q, 2 * n);
      s += static_cast<double>(n) * q2n / (1.0 - q2n);
    }
    eta1 = kPi * kPi / (12.0 * omega1) * (1.0 - 24.0 * s);
  }

  cplx wp(cplx z) const {
    const cplx k = kPi / (2.0 * omega1);
    const cplx sn = std::sin(k * z);
    cplx v = -eta1 / omega1 + k * k / (sn * sn);
    cplx s = 0.0;
    for (int n = 1; n <= 80; ++n) {
      const cplx q2n = std::pow(q, 2 * n);
      s += static_cast<double>(n) * q2n / (1.0 - q2n) * std::cos(static_cast<double>(n) * kPi * z / omega1);
    }
    return v - 2.0 * std::pow(kPi / omega1, 2) * s;
  }

  cplx sigma(cplx z) const {
    cplx v = 2.0 * omega1 / kPi * std::exp(eta1 * z * z / (2.0 * omega1)) * std::sin(kPi * z / (2.0 * omega1));
    const cplx c = std::cos(kPi * z / omega1);
    for (int n = 1; n <= 80; ++n) {
      const cplx q2n = std::pow(q, 2 * n);
      v *= (1.0 - 2.0 * q2n * c + q2n * q2n) / ((1.0 - q2n) * (1.0 - q2n));
    }
    return v;
  }
};

}  // namespace oracle
