#include "trig/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trig {

bool in_semigroup(const std::vector<int>& gens, int n) {
  if (n < 0) return false;
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int g : gens)
      if (g > 0 && g <= m && reach[m - g]) {
        reach[m] = 1;
        break;
      }
  return reach[n] != 0;
}

bool NumericalSemigroup::contains(int n) const {
  if (n < 0) return false;
  return !std::binary_search(gaps.begin(), gaps.end(), n);
}

NumericalSemigroup build_semigroup(int r, int s) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  if (s <= r) throw std::invalid_argument("need s > r (got r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  if (r == 0 && s % 3 == 0) throw std::invalid_argument("r = 0 needs gcd(3, s) = 1");
  if (r > 0 && (s - r) % 3 == 0) throw std::invalid_argument("r = s (mod 3) gives a non-numerical semigroup");

  NumericalSemigroup h;
  h.r = r;
  h.s = s;
  if (r == 0) {
    h.generators = {std::min(3, s), std::max(3, s)};
    if (s == 1) h.generators = {1};
  } else {
    h.generators = {3, h.r_hat(), h.s_hat()};
  }
  std::sort(h.generators.begin(), h.generators.end());
  h.genus = r + s - 1;

  // The conductor is at most 2g, so sieving [0, 2g] finds every gap.
  const int bound = 2 * h.genus + 1;
  for (int n = 1; n <= bound; ++n)
    if (!in_semigroup(h.generators, n)) h.gaps.push_back(n);
  if (static_cast<int>(h.gaps.size()) != h.genus)
    throw std::logic_error("gap count does not match genus r+s-1");
  return h;
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

YoungDiagram young_diagram(const NumericalSemigroup& h) {
  YoungDiagram y;
  const int g = h.genus;
  y.schubert.resize(g);
  for (int i = 0; i < g; ++i) y.schubert[i] = h.gaps[i] - i - 1;
  y.rows.resize(g);
  for (int i = 1; i <= g; ++i) y.rows[i - 1] = y.schubert[g - i] + 1;
  return y;
}

std::vector<int> gaps_from_diagram(const YoungDiagram& y) {
  const int g = static_cast<int>(y.rows.size());
  std::vector<int> gaps(g);
  for (int i = 0; i < g; ++i) {
    int alpha = y.rows[g - 1 - i] - 1;
    gaps[i] = alpha + i + 1;
  }
  return gaps;
}

bool is_symmetric(const NumericalSemigroup& h) {
  return std::binary_search(h.gaps.begin(), h.gaps.end(), 2 * h.genus - 1);
}

bool is_telescopic(const std::vector<int>& seq) {
  if (seq.empty()) return false;
  int d = 0;
  for (int w : seq) d = std::gcd(d, w);
  if (d != 1) return false;
  int d_prev = seq[0];
  for (size_t i = 1; i < seq.size(); ++i) {
    int d_i = std::gcd(d_prev, seq[i]);
    std::vector<int> gens;
    for (size_t j = 0; j < i; ++j) gens.push_back(seq[j] / d_prev);
    if (!in_semigroup(gens, seq[i] / d_i)) return false;
    d_prev = d_i;
  }
  return true;
}

bool is_telescopic_any_order(std::vector<int> seq) {
  std::sort(seq.begin(), seq.end());
  do {
    if (is_telescopic(seq)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

std::vector<int> FrobeniusData::sharp_i(int i) const {
  std::vector<int> out = sharp;
  if (!out.empty()) out[0] = i;
  return out;
}

FrobeniusData frobenius_data(const YoungDiagram& y, int k) {
  const int g = static_cast<int>(y.rows.size());
  if (k < 0 || k > g) throw std::invalid_argument("frobenius_data: k out of range");
  FrobeniusData f;
  f.k = k;
  std::vector<int> rows(y.rows.begin() + k, y.rows.end());
  // Column lengths of the truncated diagram.
  auto col_len = [&](int c) {
    int n = 0;
    for (int len : rows)
      if (len > c) ++n;
    return n;
  };
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (rows[i] <= i) break;
    int right = rows[i] - i - 1;
    int below = col_len(i) - i - 1;
    f.a.push_back(below);
    f.b.push_back(right);
    f.N += below + right + 1;
  }
  f.rank = static_cast<int>(f.a.size());
  // L^[k](a,b): the l in {k+1..g} with Lambda_l + g - l = a + b + 1.
  for (int i = 0; i < f.rank; ++i) {
    int hook = f.a[i] + f.b[i] + 1;
    int found = -1;
    for (int l = k + 1; l <= g; ++l)
      if (y.rows[l - 1] + g - l == hook) {
        found = l;
        break;
      }
    if (found < 0) throw std::logic_error("frobenius_data: no index for hook length");
    f.sharp.push_back(found);
  }
  return f;
}

std::array<MonomialRelation, 3> monomial_relations(int r, int s) {
  const int rh = 2 * r + s, sh = r + 2 * s;
  return {MonomialRelation{{0, 2, 0}, {r, 0, 1}, 2 * rh},
          MonomialRelation{{0, 1, 1}, {s + r, 0, 0}, sh + rh},
          MonomialRelation{{0, 0, 2}, {s, 1, 0}, 2 * sh}};
}

}  // namespace trig
