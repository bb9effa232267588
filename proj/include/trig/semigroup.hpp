#pragma once

#include <array>
#include <vector>

namespace trig {

// The Weierstrass semigroup <3, 2r+s, r+2s> at the point at infinity.
struct NumericalSemigroup {
  int r = 0;
  int s = 0;
  std::vector<int> generators;  // minimal, sorted
  std::vector<int> gaps;        // sorted, size == genus
  int genus = 0;

  int r_hat() const { return 2 * r + s; }
  int s_hat() const { return r + 2 * s; }
  bool contains(int n) const;
};

// Throws std::invalid_argument unless s > r >= 0 and r != s (mod 3).
NumericalSemigroup build_semigroup(int r, int s);

struct YoungDiagram {
  std::vector<int> rows;     // Lambda_1 >= ... >= Lambda_g
  std::vector<int> schubert; // alpha_i = l_i - i - 1 (zero based i)
  int size() const;          // |Lambda|
};

YoungDiagram young_diagram(const NumericalSemigroup& h);
// Inverse of young_diagram on the gap sequence.
std::vector<int> gaps_from_diagram(const YoungDiagram& y);

bool is_symmetric(const NumericalSemigroup& h);
// Telescopic in the given order (gcd must be 1).
bool is_telescopic(const std::vector<int>& seq);
// Telescopic for at least one ordering of seq.
bool is_telescopic_any_order(std::vector<int> seq);

// Generic membership test for the semigroup generated by gens.
bool in_semigroup(const std::vector<int>& gens, int n);

// Frobenius characteristics of the truncated diagram Lambda^[k] = (Lambda_{k+1}, ..., Lambda_g).
struct FrobeniusData {
  int k = 0;
  int rank = 0;             // n_k, the diagonal length
  std::vector<int> a;       // boxes below the i-th diagonal box, non-increasing
  std::vector<int> b;       // boxes to the right of the i-th diagonal box, non-increasing
  int N = 0;                // sum (a_i + b_i + 1)
  std::vector<int> sharp;   // L^[k](a_i, b_i), 1-based u indices
  // sharp with its first entry replaced by i (1 <= i <= k+1).
  std::vector<int> sharp_i(int i) const;
};

// 0 <= k <= g; k == g gives the empty diagram.
FrobeniusData frobenius_data(const YoungDiagram& y, int k);

// A binomial relation Z3^e3 Zr^er Zs^es - Z3^f3 Zr^fr Zs^fs in the monomial ring.
struct MonomialRelation {
  std::array<int, 3> lhs;  // exponents of (Z_3, Z_rhat, Z_shat)
  std::array<int, 3> rhs;
  int weight = 0;
};

// The three generators f_{2 rhat}, f_{shat + rhat}, f_{2 shat} of the kernel.
std::array<MonomialRelation, 3> monomial_relations(int r, int s);

}  // namespace trig
