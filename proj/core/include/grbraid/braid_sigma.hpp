#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "grbraid/config.hpp"
#include "grbraid/pluecker.hpp"

namespace grbraid {

/// Symbolic image of P_J under sigma_i on the frozen quotient of width m.
/// Column j = i (mod m) is replaced by column j+1; column j = i+1 (mod m)
/// by P_{j-1,j+1,...,j+m-1} * (column j) - (column j-1); the determinant
/// is expanded multilinearly.
PlueckerPoly sigma_var(int m, int i, const MinorIndex& J);

/// Memo of sigma_var for repeated substitution.
class SigmaCache {
 public:
  explicit SigmaCache(int m) : m_(m) {}
  int width() const { return m_; }
  const PlueckerPoly& get(int i, const MinorIndex& J);

 private:
  int m_;
  std::map<std::pair<int, MinorIndex>, PlueckerPoly> memo_;
};

/// sigma_i extended as a ring homomorphism; i in [1, m-1].
PlueckerPoly sigma(int i, const PlueckerPoly& p);
PlueckerPoly sigma(int i, const PlueckerPoly& p, SigmaCache& cache);

/// sh_{i-1} o sigma_1 o sh_{1-i}.
PlueckerPoly sigma_by_shift(int i, const PlueckerPoly& p);

/// Applies sigma_{w_1} first, then sigma_{w_2}, and so on.
PlueckerPoly apply_word(const PlueckerPoly& p, std::span<const int> word);

void check_sigma_index(int m, int i);

/// The configuration map kappa_i: position j = i (mod m) takes v_{j+1};
/// position j = i+1 (mod m) takes C v_j - v_{j-1} with
/// C = det(v_{j-1}, v_{j+1}, ..., v_{j+m-1}) / det(v_j, ..., v_{j+m-1}).
/// The output range is [lo', hi - m], lo' = lo + 1 when lo = i+1 (mod m).
template <class F>
Config<F> kappa(const Config<F>& c, int i) {
  const int m = c.width();
  check_sigma_index(m, i);
  const F& field = c.field();
  auto residue = [m](int j) { return ((j % m) + m) % m; };
  const int lo = residue(c.lo()) == residue(i + 1) ? c.lo() + 1 : c.lo();
  const int hi = c.hi() - m;
  if (hi - lo + 1 < m) throw std::invalid_argument("configuration too short for kappa");
  std::vector<typename Config<F>::Column> out;
  std::vector<int> num(static_cast<std::size_t>(m));
  std::vector<int> den(static_cast<std::size_t>(m));
  for (int j = lo; j <= hi; ++j) {
    if (residue(j) == residue(i)) {
      out.push_back(c.column(j + 1));
    } else if (residue(j) == residue(i + 1)) {
      num[0] = j - 1;
      for (int s = 1; s < m; ++s) num[static_cast<std::size_t>(s)] = j + s;
      for (int s = 0; s < m; ++s) den[static_cast<std::size_t>(s)] = j + s;
      const auto coeff = field.mul(c.det(num), field.inv(c.det(den)));
      const auto& vj = c.column(j);
      const auto& vprev = c.column(j - 1);
      typename Config<F>::Column w(static_cast<std::size_t>(m));
      for (std::size_t r = 0; r < w.size(); ++r) w[r] = field.sub(field.mul(coeff, vj[r]), vprev[r]);
      out.push_back(std::move(w));
    } else {
      out.push_back(c.column(j));
    }
  }
  return Config<F>(field, m, lo, std::move(out));
}

/// Value at `c` of the word image of p (sigma_{w_1} applied first), computed
/// level by level without expanding the composite polynomial.
template <class F>
typename F::Elem evaluate_word(const PlueckerPoly& p, std::span<const int> word, const Config<F>& c,
                               SigmaCache& cache) {
  using Elem = typename F::Elem;
  const int k = static_cast<int>(word.size());
  std::vector<std::map<MinorIndex, Elem>> memo(static_cast<std::size_t>(k + 1));
  // Level 0 reads the configuration; level l substitutes sigma_{w_{k-l+1}}.
  auto val = [&](auto&& self, int level, const MinorIndex& L) -> Elem {
    auto& table = memo[static_cast<std::size_t>(level)];
    if (auto it = table.find(L); it != table.end()) return it->second;
    Elem v;
    if (level == 0) {
      v = c.minor(L);
    } else {
      const int letter = word[static_cast<std::size_t>(k - level)];
      v = evaluate_with(cache.get(letter, L), c.field(),
                        [&](const MinorIndex& J) { return self(self, level - 1, J); });
    }
    table.emplace(L, v);
    return v;
  };
  return evaluate_with(p, c.field(), [&](const MinorIndex& L) { return val(val, k, L); });
}

/// Column range that a configuration needs for evaluate_word on p.
std::pair<int, int> word_range(const PlueckerPoly& p, std::size_t word_length);

/// eq_mod between the word images sigma_wp(p) and sigma_wq(q).
EqModResult eq_mod_words(const PlueckerPoly& p, std::span<const int> wp, const PlueckerPoly& q,
                         std::span<const int> wq, const EqModOptions& opts = {});

// Index tuples of the sigma_1 case table.

/// i_a = (1, ..., a, a+2, ..., m+1).
MinorIndex i_tuple(int m, int a);
/// i_{a,b} = i_a + (b-a+1)/2; requires b - a odd.
MinorIndex i_tuple(int m, int a, int b);

enum class CaseKind { A, B, C, D, other };

/// (a, b) with a in [1,m], a-1 <= b <= a+2m-3, b-a odd, plus (m, 3m-1).
std::vector<std::pair<int, int>> case_table_domain(int m);
CaseKind case_kind(int m, int a, int b);
/// The tabulated value of sigma_1(P_{i_{a,b}}).
PlueckerPoly case_table_value(int m, int a, int b);

}  // namespace grbraid
