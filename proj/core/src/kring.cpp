#include "grbraid/kring.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grbraid {

void check_fund(int n, FundIndex f) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (f.i < 1 || f.i > n) {
    throw std::invalid_argument("fundamental index " + to_string(f) + " has i outside [1, " +
                                std::to_string(n) + "]");
  }
  if (((f.a - f.i) % 2 + 2) % 2 != 1) {
    throw std::invalid_argument("fundamental index " + to_string(f) + " violates a - i odd");
  }
}

bool in_Q(int n, FundIndex f) { return f.a >= f.i - 1 && f.a <= 2 * n - f.i - 1; }

std::string to_string(FundIndex f) {
  return "Y_{" + std::to_string(f.i) + "," + std::to_string(f.a) + "}";
}

FundIndex dual_power(int n, FundIndex f, int k) {
  for (; k > 0; --k) f = {n + 1 - f.i, f.a + n + 1};
  for (; k < 0; ++k) f = {n + 1 - f.i, f.a - n - 1};
  return f;
}

std::pair<int, FundIndex> locate(int n, FundIndex f) {
  check_fund(n, f);
  int k = 0;
  const int limit = 2 * (std::abs(f.a) / (n + 1) + 2);
  for (int step = 0; !in_Q(n, f); ++step) {
    if (step > limit) throw std::logic_error("locate did not terminate for " + to_string(f));
    if (f.a > 2 * n - f.i - 1) {
      f = dual_power(n, f, -1);
      ++k;
    } else {
      f = dual_power(n, f, 1);
      --k;
    }
  }
  return {k, f};
}

std::string to_string(const KMonomial& mono) {
  if (mono.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  // Largest spectral parameter first, as in ordered products of fundamentals.
  std::vector<std::pair<FundIndex, int>> items(mono.begin(), mono.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.a != y.first.a) return x.first.a > y.first.a;
    return x.first.i > y.first.i;
  });
  for (const auto& [f, e] : items) {
    if (!first) os << '*';
    first = false;
    os << to_string(f);
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

KPoly::KPoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

KPoly::KPoly(int n, const std::vector<std::pair<KMonomial, BigInt>>& terms) : KPoly(n) {
  for (const auto& [mono, c] : terms) add_term(mono, c);
}

void KPoly::add_term(const KMonomial& mono, const BigInt& coeff) {
  if (coeff == 0) return;
  KMonomial clean;
  for (const auto& [f, e] : mono) {
    check_fund(n_, f);
    if (e < 0) throw std::invalid_argument("negative exponent on " + to_string(f));
    if (e > 0) clean.emplace(f, e);
  }
  auto [it, inserted] = terms_.try_emplace(clean, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

KPoly KPoly::constant(int n, const BigInt& c) {
  KPoly p(n);
  p.add_term({}, c);
  return p;
}

KPoly KPoly::variable(int n, FundIndex f, int exponent) {
  KPoly p(n);
  p.add_term({{f, exponent}}, 1);
  return p;
}

KPoly KPoly::monomial(int n, const KMonomial& mono) {
  KPoly p(n);
  p.add_term(mono, 1);
  return p;
}

void KPoly::check_rank(const KPoly& other) const {
  if (other.n_ != n_) throw std::invalid_argument("KPoly rank mismatch");
}

KPoly KPoly::operator-() const {
  KPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

KPoly& KPoly::operator+=(const KPoly& other) {
  check_rank(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

KPoly& KPoly::operator-=(const KPoly& other) {
  check_rank(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  a.check_rank(b);
  KPoly out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      KMonomial mono = ma;
      for (const auto& [f, e] : mb) mono[f] += e;
      BigInt prod = ca * cb;
      out.add_term(mono, prod);
    }
  }
  return out;
}

std::string to_string(const KPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Higher degree first reads naturally for the T_1 images.
  std::vector<std::pair<KMonomial, BigInt>> items(p.terms().begin(), p.terms().end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (const auto& [f, e] : x.first) dx += e;
    for (const auto& [f, e] : y.first) dy += e;
    return dx > dy;
  });
  for (const auto& [mono, c] : items) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(mono);
    }
  }
  return os.str();
}

KPoly spectral_shift(const KPoly& p, int k) {
  const int n = p.rank();
  return substitute(p, [&](FundIndex f) { return KPoly::variable(n, {f.i, f.a + 2 * k}); });
}

KPoly dual(const KPoly& p) {
  const int n = p.rank();
  return substitute(p, [&](FundIndex f) { return KPoly::variable(n, dual_power(n, f, 1)); });
}

KPoly braid_T1_var(int n, FundIndex f) {
  const auto [k, base] = locate(n, f);
  auto Y = [&](FundIndex g) { return KPoly::variable(n, dual_power(n, g, k)); };
  const int i = base.i;
  const int p = base.a;
  if (i == 1 && p == 0) return Y({n, n + 1});
  if (p == i - 1 && i > 1) return Y({n, n + 1}) * Y({i, i - 1}) - Y({i - 1, i});
  if (p == i + 1) return Y({i + 1, i});
  return KPoly::variable(n, f);
}

KPoly braid_T1(const KPoly& p) {
  const int n = p.rank();
  std::map<FundIndex, KPoly> memo;
  return substitute(p, [&](FundIndex f) {
    auto it = memo.find(f);
    if (it == memo.end()) it = memo.emplace(f, braid_T1_var(n, f)).first;
    return it->second;
  });
}

KPoly braid_T(int i, const KPoly& p) {
  if (i < 1 || i > p.rank()) {
    throw std::out_of_range("braid index " + std::to_string(i) + " outside [1, " +
                            std::to_string(p.rank()) + "]");
  }
  return spectral_shift(braid_T1(spectral_shift(p, 1 - i)), i - 1);
}

KPoly braid_T_word(const KPoly& p, const std::vector<int>& word) {
  KPoly cur = p;
  for (int i : word) cur = braid_T(i, cur);
  return cur;
}

DominantMonomial rank2_R(int i, const DominantMonomial& m) {
  constexpr int n = 2;
  if (i != 1 && i != 2) throw std::out_of_range("rank-2 braid index must be 1 or 2");
  // Exponents per grade of Y_{D^k(1,2)}, Y_{D^k(2,1)}, Y_{D^k(1,0)}.
  std::map<int, int> a, b, c;
  std::set<int> grades;
  for (const auto& [f, e] : m) {
    if (e <= 0) throw std::invalid_argument("dominant monomial needs positive exponents");
    const auto [k, base] = locate(n, f);
    if (base == FundIndex{1, 2}) a[k] += e;
    else if (base == FundIndex{2, 1}) b[k] += e;
    else c[k] += e;
    grades.insert(k);
    grades.insert(k + 1);
  }
  auto get = [](const std::map<int, int>& x, int k) {
    auto it = x.find(k);
    return it == x.end() ? 0 : it->second;
  };
  DominantMonomial out;
  auto put = [&](FundIndex base, int k, int e) {
    if (e > 0) out[dual_power(n, base, k)] += e;
  };
  for (int k : grades) {
    const int ak = get(a, k), bk = get(b, k), ck = get(c, k);
    const int ap = get(a, k - 1), bp = get(b, k - 1), cp = get(c, k - 1);
    if (i == 1) {
      put({1, 2}, k, std::min(ak, ck));
      put({2, 1}, k, bk + std::max(ak - ck, 0));
      put({1, 0}, k, bp + std::max(cp - ap, 0));
    } else {
      const int t = std::min(ap, bk);
      put({1, 2}, k, ap + ck - t);
      put({2, 1}, k, t);
      put({1, 0}, k, bk + ck - t);
    }
  }
  return out;
}

DominantMonomial random_rank2_monomial(std::mt19937_64& rng, int support, int max_exp,
                                       double density) {
  constexpr int n = 2;
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> exp_dist(1, max_exp);
  DominantMonomial out;
  for (int k = -support; k <= support; ++k) {
    for (FundIndex base : {FundIndex{1, 2}, FundIndex{2, 1}, FundIndex{1, 0}}) {
      if (present(rng)) out[dual_power(n, base, k)] += exp_dist(rng);
    }
  }
  return out;
}

}  // namespace grbraid
