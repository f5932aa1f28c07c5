#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grbraid/field.hpp"
#include "grbraid/pluecker.hpp"

namespace grbraid {

/// Determinant by Gaussian elimination; `rows` is consumed.
template <class F>
typename F::Elem determinant(const F& field, std::vector<std::vector<typename F::Elem>> rows) {
  using Elem = typename F::Elem;
  const std::size_t n = rows.size();
  Elem det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && field.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != c) {
      std::swap(rows[pivot], rows[c]);
      det = field.neg(det);
    }
    det = field.mul(det, rows[c][c]);
    const Elem inv = field.inv(rows[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(rows[r][c])) continue;
      const Elem factor = field.mul(rows[r][c], inv);
      for (std::size_t k = c; k < n; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[c][k]));
      }
    }
  }
  return det;
}

/// Columns v_lo..v_hi in F^m. Produced normalized by
/// random_normalized_config (every m consecutive columns have determinant 1).
template <class F>
class Config {
 public:
  using Elem = typename F::Elem;
  using Column = std::vector<Elem>;

  Config(F field, int m, int lo, std::vector<Column> columns)
      : field_(std::move(field)), m_(m), lo_(lo), columns_(std::move(columns)) {
    for (const auto& c : columns_) {
      if (static_cast<int>(c.size()) != m_) throw std::invalid_argument("column length != m");
    }
  }

  const F& field() const { return field_; }
  int width() const { return m_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(columns_.size()) - 1; }
  bool covers(int a, int b) const { return a >= lo_ && b <= hi(); }

  const Column& column(int j) const {
    if (j < lo_ || j > hi()) {
      throw std::out_of_range("column " + std::to_string(j) + " outside configuration range [" +
                              std::to_string(lo_) + ", " + std::to_string(hi()) + "]");
    }
    return columns_[static_cast<std::size_t>(j - lo_)];
  }
  const std::vector<Column>& columns() const { return columns_; }

  /// det of the listed columns in the listed order.
  Elem det(std::span<const int> cols) const {
    if (static_cast<int>(cols.size()) != m_) throw std::invalid_argument("need m columns");
    std::vector<Column> rows(static_cast<std::size_t>(m_), Column(static_cast<std::size_t>(m_)));
    for (int c = 0; c < m_; ++c) {
      const Column& v = column(cols[static_cast<std::size_t>(c)]);
      for (int r = 0; r < m_; ++r) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(r)];
      }
    }
    return determinant(field_, std::move(rows));
  }
  Elem minor(const MinorIndex& idx) const { return det(idx.entries()); }

 private:
  F field_;
  int m_;
  int lo_;
  std::vector<Column> columns_;
};

/// Per-trial generator: mt19937_64 seeded from (seed low, seed high, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

/// Random columns on [lo, hi], rescaled so that every window of m
/// consecutive columns has determinant exactly 1.
template <class F>
Config<F> random_normalized_config(const F& field, int m, int lo, int hi, std::uint64_t seed,
                                   std::uint64_t trial = 0) {
  if (hi - lo + 1 < m) throw std::invalid_argument("configuration range shorter than m");
  using Elem = typename F::Elem;
  auto rng = trial_rng(seed, trial);
  const auto mz = static_cast<std::size_t>(m);
  std::vector<std::vector<Elem>> cols;
  cols.reserve(static_cast<std::size_t>(hi - lo + 1));
  auto sample = [&] {
    std::vector<Elem> v(mz);
    for (auto& x : v) x = field.random(rng);
    return v;
  };
  for (int j = lo; j < lo + m - 1; ++j) cols.push_back(sample());
  constexpr int kMaxResample = 64;
  for (int k = lo + m - 1; k <= hi; ++k) {
    cols.push_back(sample());
    for (int attempt = 0;; ++attempt) {
      std::vector<std::vector<Elem>> rows(mz, std::vector<Elem>(mz));
      for (std::size_t c = 0; c < mz; ++c)
        for (std::size_t r = 0; r < mz; ++r) rows[r][c] = cols[cols.size() - mz + c][r];
      const Elem d = determinant(field, std::move(rows));
      if (!field.is_zero(d)) {
        const Elem s = field.inv(d);
        for (auto& x : cols.back()) x = field.mul(x, s);
        break;
      }
      if (attempt >= kMaxResample) {
        throw std::runtime_error("could not sample a consecutively generic configuration over " +
                                 field.name());
      }
      // Past the first window the m-1 predecessors are independent, so only
      // the new column can be at fault; in the first window redraw it all.
      if (k == lo + m - 1) {
        for (auto& v : cols) v = sample();
      } else {
        cols.back() = sample();
      }
    }
  }
  return Config<F>(field, m, lo, std::move(cols));
}

/// Evaluates p with P_J replaced by val(J).
template <class F, class Valuation>
typename F::Elem evaluate_with(const PlueckerPoly& p, const F& field, Valuation&& val) {
  using Elem = typename F::Elem;
  Elem total = field.zero();
  std::map<MinorIndex, Elem> cache;
  for (const auto& [mono, coeff] : p.terms()) {
    Elem term = field.from_bigint(coeff);
    for (const auto& v : mono) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, val(v)).first;
      term = field.mul(term, it->second);
    }
    total = field.add(total, term);
  }
  return total;
}

/// Substitutes each P_J by the determinant of the selected columns.
template <class F>
typename F::Elem evaluate(const PlueckerPoly& p, const Config<F>& c) {
  if (p.width() != c.width()) throw std::invalid_argument("polynomial and configuration widths differ");
  return evaluate_with(p, c.field(), [&](const MinorIndex& v) { return c.minor(v); });
}

enum class FieldKind { prime, rational };

struct EqModOptions {
  int trials = 8;
  std::uint64_t seed = 0;
  std::uint64_t prime = kDefaultPrime;
  FieldKind field = FieldKind::prime;
};

/// Reproduces a failing trial: the configuration is
/// random_normalized_config(field, m, lo, hi, seed, trial).
struct EqModWitness {
  std::uint64_t seed = 0;
  int trial = 0;
  int lo = 0;
  int hi = 0;
  std::string field;
  std::string lhs;
  std::string rhs;
};

struct EqModResult {
  bool equal = false;
  std::optional<EqModWitness> witness;
  explicit operator bool() const { return equal; }
};

/// Equality in the frozen quotient by evaluation on `trials` normalized
/// configurations covering the joint index range with m columns of margin.
/// "false" is definitive; "true" has one-sided error.
EqModResult eq_mod(const PlueckerPoly& p, const PlueckerPoly& q, const EqModOptions& opts = {});

/// Joint column range of the polynomials widened by `margin`; [1, m] when
/// no variable occurs.
std::pair<int, int> joint_range(std::span<const PlueckerPoly* const> polys, int margin);

}  // namespace grbraid
