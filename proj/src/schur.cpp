#include "trig/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trig {

MultiPoly MultiPoly::constant(int nvars, cplx c) {
  MultiPoly p;
  p.nvars = nvars;
  if (c != cplx(0.0)) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p;
  p.nvars = nvars;
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms[e] = 1.0;
  return p;
}

cplx MultiPoly::eval(const std::vector<cplx>& u) const {
  cplx acc(0.0);
  for (const auto& [e, c] : terms) {
    cplx m = c;
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) m *= u[i];
    acc += m;
  }
  return acc;
}

int MultiPoly::max_weight(const std::vector<int>& w) const {
  int best = -1;
  for (const auto& [e, c] : terms) best = std::max(best, std::inner_product(e.begin(), e.end(), w.begin(), 0));
  return best;
}

int MultiPoly::min_weight(const std::vector<int>& w) const {
  int best = -1;
  for (const auto& [e, c] : terms) {
    const int v = std::inner_product(e.begin(), e.end(), w.begin(), 0);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

void MultiPoly::prune(double tol) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= tol) it = terms.erase(it);
    else ++it;
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  out.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [e, c] : b.terms) out.terms[e] += c;
  out.prune(0.0);
  return out;
}

MultiPoly operator*(cplx s, const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms) c *= s;
  out.prune(0.0);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + cplx(-1.0) * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out;
  out.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      out.terms[e] += ca * cb;
    }
  out.prune(0.0);
  return out;
}

MultiPoly schur_polynomial(const YoungDiagram& y) {
  const int g = static_cast<int>(y.rows.size());
  const int size = y.size();
  // T_k as polynomials in u.
  std::vector<MultiPoly> T(size + 1, MultiPoly::constant(g, 0.0));
  for (int i = 1; i <= g; ++i) {
    const int k = y.rows[i - 1] + g - i;
    if (k <= size) T[k] = T[k] + MultiPoly::variable(g, i - 1);
  }
  // k h_k = sum_{j=1}^k j T_j h_{k-j}.
  std::vector<MultiPoly> h(size + 1, MultiPoly::constant(g, 0.0));
  h[0] = MultiPoly::constant(g, 1.0);
  for (int k = 1; k <= size; ++k) {
    MultiPoly acc = MultiPoly::constant(g, 0.0);
    for (int j = 1; j <= k; ++j) acc = acc + cplx(static_cast<double>(j)) * (T[j] * h[k - j]);
    h[k] = cplx(1.0 / k) * acc;
  }
  auto H = [&](int k) { return (k < 0 || k > size) ? MultiPoly::constant(g, 0.0) : h[k]; };
  // Leibniz expansion of the l x l determinant.
  std::vector<int> rows;
  for (int r : y.rows)
    if (r > 0) rows.push_back(r);
  const int l = static_cast<int>(rows.size());
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det = MultiPoly::constant(g, l == 0 ? 1.0 : 0.0);
  if (l == 0) return det;
  do {
    int inversions = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MultiPoly term = MultiPoly::constant(g, (inversions % 2) ? -1.0 : 1.0);
    for (int i = 0; i < l; ++i) term = term * H(rows[i] - i + perm[i]);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  det.prune(1e-13);
  return det;
}

}  // namespace trig
