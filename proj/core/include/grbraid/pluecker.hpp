#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grbraid/bigint.hpp"

namespace grbraid {

inline constexpr int kMaxMinorWidth = 8;

/// A strictly increasing m-tuple of integers, the label of P_i.
class MinorIndex {
 public:
  MinorIndex() = default;
  /// Throws std::invalid_argument unless `entries` is strictly increasing
  /// with width in [2, kMaxMinorWidth].
  explicit MinorIndex(std::span<const int> entries);
  MinorIndex(std::initializer_list<int> entries)
      : MinorIndex(std::span<const int>(entries.begin(), entries.size())) {}

  int width() const { return width_; }
  int operator[](int pos) const { return entries_[static_cast<std::size_t>(pos)]; }
  std::span<const int> entries() const {
    return {entries_.data(), static_cast<std::size_t>(width_)};
  }
  int front() const { return entries_[0]; }
  int back() const { return entries_[static_cast<std::size_t>(width_ - 1)]; }

  /// Consecutive run (i, i+1, ..., i+m-1).
  bool is_frozen() const { return back() - front() == width_ - 1; }
  bool contains(int value) const;
  MinorIndex shifted(int t) const;

  friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;

 private:
  std::uint8_t width_ = 0;
  std::array<int, kMaxMinorWidth> entries_{};
};

std::string to_string(const MinorIndex& idx);

struct SignedMinor {
  int sign = 1;
  MinorIndex index;
};

/// Sorts `raw`, returning the permutation parity as the sign; std::nullopt
/// if an entry repeats (the variable is zero). Throws std::invalid_argument
/// if `raw.size() != m`.
std::optional<SignedMinor> normalize_minor(std::span<const int> raw, int m);

/// An element of the frozen quotient: a polynomial with integer
/// coefficients in sign-normalized Pluecker variables, frozen variables
/// replaced by 1.
class PlueckerPoly {
 public:
  /// Sorted list of variables, repeated by exponent.
  using Monomial = std::vector<MinorIndex>;
  using Terms = std::map<Monomial, BigInt>;

  explicit PlueckerPoly(int m);
  /// Canonicalizes: drops frozen factors, sorts monomials, merges and
  /// removes zero coefficients. Throws on width mismatch.
  PlueckerPoly(int m, const std::vector<std::pair<Monomial, BigInt>>& terms);

  static PlueckerPoly constant(int m, const BigInt& c);
  /// P_raw with sign normalization; zero if an entry repeats, 1 if frozen.
  static PlueckerPoly variable(int m, std::span<const int> raw);
  static PlueckerPoly variable(int m, std::initializer_list<int> raw) {
    return variable(m, std::span<const int>(raw.begin(), raw.size()));
  }
  static PlueckerPoly variable(const MinorIndex& idx);

  int width() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<BigInt> constant_value() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int degree() const;

  std::set<MinorIndex> variables() const;
  /// Smallest and largest column index used by any variable.
  std::optional<std::pair<int, int>> index_range() const;

  PlueckerPoly operator-() const;
  PlueckerPoly& operator+=(const PlueckerPoly& other);
  PlueckerPoly& operator-=(const PlueckerPoly& other);
  friend PlueckerPoly operator+(PlueckerPoly a, const PlueckerPoly& b) { return a += b; }
  friend PlueckerPoly operator-(PlueckerPoly a, const PlueckerPoly& b) { return a -= b; }
  friend PlueckerPoly operator*(const PlueckerPoly& a, const PlueckerPoly& b);
  PlueckerPoly scaled(const BigInt& c) const;
  PlueckerPoly pow(int e) const;

  friend bool operator==(const PlueckerPoly&, const PlueckerPoly&) = default;

 private:
  void check_width(const PlueckerPoly& other) const;
  void add_term(Monomial mono, const BigInt& coeff);

  int m_;
  Terms terms_;
};

/// Text form, e.g. "P_{1,3,4}*P_{2,4,5} - P_{1,2,4}".
std::string to_string(const PlueckerPoly& p);

/// sum_{t=1}^{m+1} (-1)^t P_{i_1..i_{m-1}, j_t} P_{j_1..^j_t..j_{m+1}} for
/// increasing `i` of length m-1 and increasing `j` of length m+1.
PlueckerPoly plucker_generator(std::span<const int> i, std::span<const int> j);

/// sh_t: P_i -> P_{i+t}.
PlueckerPoly shift(const PlueckerPoly& p, int t);

/// Ring homomorphism determined by an image for every variable.
template <class Image>
PlueckerPoly substitute(const PlueckerPoly& p, int target_width, Image&& image) {
  PlueckerPoly out(target_width);
  for (const auto& [mono, coeff] : p.terms()) {
    PlueckerPoly term = PlueckerPoly::constant(target_width, coeff);
    for (const auto& var : mono) term = term * image(var);
    out += term;
  }
  return out;
}

}  // namespace grbraid
