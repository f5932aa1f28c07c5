#include "grbraid/braid_sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace grbraid {

namespace {

int residue(int j, int m) { return ((j % m) + m) % m; }

// One column of the substituted determinant: coefficient times column.
struct Option {
  PlueckerPoly coeff;
  int column;
};

}  // namespace

void check_sigma_index(int m, int i) {
  if (i < 1 || i > m - 1) {
    throw std::out_of_range("braid index " + std::to_string(i) + " outside [1, " +
                            std::to_string(m - 1) + "]");
  }
}

PlueckerPoly sigma_var(int m, int i, const MinorIndex& J) {
  check_sigma_index(m, i);
  if (J.width() != m) throw std::invalid_argument("sigma_var: minor width differs from m");
  if (J.is_frozen()) return PlueckerPoly::constant(m, 1);

  std::vector<std::vector<Option>> options(static_cast<std::size_t>(m));
  for (int pos = 0; pos < m; ++pos) {
    const int j = J[pos];
    auto& opts = options[static_cast<std::size_t>(pos)];
    if (residue(j, m) == residue(i, m)) {
      opts.push_back({PlueckerPoly::constant(m, 1), j + 1});
    } else if (residue(j, m) == residue(i + 1, m)) {
      std::vector<int> cidx{j - 1};
      for (int s = 1; s < m; ++s) cidx.push_back(j + s);
      opts.push_back({PlueckerPoly::variable(m, cidx), j});
      opts.push_back({PlueckerPoly::constant(m, -1), j - 1});
    } else {
      opts.push_back({PlueckerPoly::constant(m, 1), j});
    }
  }

  PlueckerPoly out(m);
  std::vector<int> cols(static_cast<std::size_t>(m));
  auto expand = [&](auto&& self, int pos, const PlueckerPoly& coeff) -> void {
    if (pos == m) {
      const auto n = normalize_minor(cols, m);
      if (!n) return;
      out += (coeff * PlueckerPoly::variable(n->index)).scaled(n->sign);
      return;
    }
    for (const auto& o : options[static_cast<std::size_t>(pos)]) {
      cols[static_cast<std::size_t>(pos)] = o.column;
      self(self, pos + 1, coeff * o.coeff);
    }
  };
  expand(expand, 0, PlueckerPoly::constant(m, 1));
  return out;
}

const PlueckerPoly& SigmaCache::get(int i, const MinorIndex& J) {
  auto key = std::make_pair(i, J);
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, sigma_var(m_, i, J)).first;
  return it->second;
}

PlueckerPoly sigma(int i, const PlueckerPoly& p, SigmaCache& cache) {
  if (cache.width() != p.width()) throw std::invalid_argument("sigma cache width mismatch");
  check_sigma_index(p.width(), i);
  return substitute(p, p.width(), [&](const MinorIndex& v) { return cache.get(i, v); });
}

PlueckerPoly sigma(int i, const PlueckerPoly& p) {
  SigmaCache cache(p.width());
  return sigma(i, p, cache);
}

PlueckerPoly sigma_by_shift(int i, const PlueckerPoly& p) {
  check_sigma_index(p.width(), i);
  return shift(sigma(1, shift(p, 1 - i)), i - 1);
}

PlueckerPoly apply_word(const PlueckerPoly& p, std::span<const int> word) {
  SigmaCache cache(p.width());
  PlueckerPoly cur = p;
  for (int i : word) cur = sigma(i, cur, cache);
  return cur;
}

std::pair<int, int> word_range(const PlueckerPoly& p, std::size_t word_length) {
  const int m = p.width();
  const auto r = p.index_range();
  if (!r) return {1, m};
  // Each substitution reaches one column left and m-1 columns right.
  const int k = static_cast<int>(word_length);
  return {r->first - k - m, r->second + k * (m - 1) + m};
}

EqModResult eq_mod_words(const PlueckerPoly& p, std::span<const int> wp, const PlueckerPoly& q,
                         std::span<const int> wq, const EqModOptions& opts) {
  const int m = p.width();
  if (q.width() != m) throw std::invalid_argument("eq_mod_words: width mismatch");
  for (int i : wp) check_sigma_index(m, i);
  for (int i : wq) check_sigma_index(m, i);
  const auto rp = word_range(p, wp.size());
  const auto rq = word_range(q, wq.size());
  const int lo = std::min(rp.first, rq.first);
  const int hi = std::max(rp.second, rq.second);
  SigmaCache cache(m);
  auto run = [&](const auto& field) -> EqModResult {
    for (int t = 0; t < opts.trials; ++t) {
      const auto c = random_normalized_config(field, m, lo, hi, opts.seed, static_cast<std::uint64_t>(t));
      const auto lhs = evaluate_word(p, wp, c, cache);
      const auto rhs = evaluate_word(q, wq, c, cache);
      if (!field.equal(lhs, rhs)) {
        return {false, EqModWitness{opts.seed, t, lo, hi, field.name(), field.str(lhs), field.str(rhs)}};
      }
    }
    return {true, std::nullopt};
  };
  if (opts.field == FieldKind::rational) return run(RationalField());
  return run(PrimeField(opts.prime));
}

MinorIndex i_tuple(int m, int a) {
  if (a < 1 || a > m) throw std::out_of_range("i_a needs a in [1, m]");
  std::vector<int> e;
  for (int s = 1; s <= a; ++s) e.push_back(s);
  for (int s = a + 2; s <= m + 1; ++s) e.push_back(s);
  return MinorIndex(e);
}

MinorIndex i_tuple(int m, int a, int b) {
  if (((b - a) % 2 + 2) % 2 != 1) {
    throw std::invalid_argument("i_{a,b} needs b - a odd, got (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
  }
  // b - a + 1 is even, so floor division is exact.
  const int t = (b - a + 1) / 2;
  return i_tuple(m, a).shifted(t);
}

std::vector<std::pair<int, int>> case_table_domain(int m) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= m; ++a)
    for (int b = a - 1; b <= a + 2 * m - 3; b += 2) out.emplace_back(a, b);
  out.emplace_back(m, 3 * m - 1);
  return out;
}

CaseKind case_kind(int m, int a, int b) {
  if (a == m) return CaseKind::D;
  if (a == m - 1 && b == m) return CaseKind::B;
  if (a >= 1 && a <= m - 2 && b == a + 1) return CaseKind::A;
  if (a + b == 2 * m - 1 && b > m) return CaseKind::C;
  return CaseKind::other;
}

PlueckerPoly case_table_value(int m, int a, int b) {
  switch (case_kind(m, a, b)) {
    case CaseKind::A:
      return PlueckerPoly::variable(i_tuple(m, a + 1, a));
    case CaseKind::B:
      return PlueckerPoly::variable(i_tuple(m, 1, 2 * m));
    case CaseKind::C:
      return PlueckerPoly::variable(i_tuple(m, 1, 2 * m)) * PlueckerPoly::variable(i_tuple(m, a, b)) -
             PlueckerPoly::variable(i_tuple(m, a + 1, b + 1));
    case CaseKind::D:
      return PlueckerPoly::constant(m, 1);
    case CaseKind::other:
      break;
  }
  // w = s_1 s_{m+1} permutes the values 1<->2 and m+1<->m+2.
  std::vector<int> image;
  for (int v : i_tuple(m, a, b).entries()) {
    if (v == 1) v = 2;
    else if (v == 2) v = 1;
    else if (v == m + 1) v = m + 2;
    else if (v == m + 2) v = m + 1;
    image.push_back(v);
  }
  std::sort(image.begin(), image.end());
  return PlueckerPoly::variable(MinorIndex(image));
}

}  // namespace grbraid
