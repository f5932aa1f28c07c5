#pragma once

#include <compare>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grbraid/bigint.hpp"

namespace grbraid {

/// Label (i, a) of the fundamental class Y_{i,a}; a - i is odd.
struct FundIndex {
  int i = 1;
  int a = 0;

  friend auto operator<=>(const FundIndex&, const FundIndex&) = default;
};

/// Throws std::invalid_argument unless i in [1,n] and a - i is odd.
void check_fund(int n, FundIndex f);
bool in_Q(int n, FundIndex f);
std::string to_string(FundIndex f);

/// D(i, a) = (n+1-i, a+n+1), applied k times (k may be negative).
FundIndex dual_power(int n, FundIndex f, int k);

/// The unique (k, base) with f = D^k(base) and base in the Q-datum slice
/// i-1 <= a <= 2n-i-1.
std::pair<int, FundIndex> locate(int n, FundIndex f);

/// Product of fundamentals with positive exponents; labels a simple class
/// when read as a dominant monomial.
using KMonomial = std::map<FundIndex, int>;
using DominantMonomial = KMonomial;

std::string to_string(const KMonomial& mono);

/// Polynomial with integer coefficients in the Y_{i,a}.
class KPoly {
 public:
  using Terms = std::map<KMonomial, BigInt>;

  explicit KPoly(int n);
  KPoly(int n, const std::vector<std::pair<KMonomial, BigInt>>& terms);

  static KPoly constant(int n, const BigInt& c);
  static KPoly variable(int n, FundIndex f, int exponent = 1);
  static KPoly monomial(int n, const KMonomial& mono);

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  KPoly operator-() const;
  KPoly& operator+=(const KPoly& other);
  KPoly& operator-=(const KPoly& other);
  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator*(const KPoly& a, const KPoly& b);

  friend bool operator==(const KPoly&, const KPoly&) = default;

 private:
  void check_rank(const KPoly& other) const;
  void add_term(const KMonomial& mono, const BigInt& coeff);

  int n_;
  Terms terms_;
};

/// e.g. "Y_{3,4}*Y_{2,1} - Y_{1,2}".
std::string to_string(const KPoly& p);

/// Ring homomorphism given an image for every fundamental.
template <class Image>
KPoly substitute(const KPoly& p, Image&& image) {
  KPoly out(p.rank());
  for (const auto& [mono, coeff] : p.terms()) {
    KPoly term = KPoly::constant(p.rank(), coeff);
    for (const auto& [f, e] : mono)
      for (int t = 0; t < e; ++t) term = term * image(f);
    out += term;
  }
  return out;
}

/// Spectral shift S_k: Y_{i,a} -> Y_{i,a+2k}.
KPoly spectral_shift(const KPoly& p, int k);
/// Right dual: Y_{i,a} -> Y_{n+1-i,a+n+1}.
KPoly dual(const KPoly& p);

/// T_1 on a single fundamental.
KPoly braid_T1_var(int n, FundIndex f);
KPoly braid_T1(const KPoly& p);
/// T_i = S_{i-1} o T_1 o S_{1-i}.
KPoly braid_T(int i, const KPoly& p);
/// Applies T_{w_1} first.
KPoly braid_T_word(const KPoly& p, const std::vector<int>& word);

/// The rank-2 closed forms of R_1 (m') and R_2 (m'') on dominant monomials.
DominantMonomial rank2_R(int i, const DominantMonomial& m);

/// Exponents a_k, b_k, c_k uniform in [0, max_exp] with probability
/// `density` each, grades in [-support, support].
DominantMonomial random_rank2_monomial(std::mt19937_64& rng, int support = 2, int max_exp = 2,
                                       double density = 0.35);

}  // namespace grbraid
