#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "grbraid/bigint.hpp"

namespace grbraid {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

namespace detail {

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// F_p for a prime p < 2^63.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p >= (std::uint64_t{1} << 63) || !detail::is_prime_u64(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^63");
    }
  }

  std::uint64_t modulus() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    const auto p = static_cast<long long>(p_);
    long long r = v % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  Elem from_bigint(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint64_t>();
  }
  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return detail::mulmod(a, b, p_); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    return detail::powmod(a, p_ - 2, p_);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  template <class Rng>
  Elem random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
  }

  std::string str(Elem a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
};

/// The rationals, sampled from small integers.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  explicit RationalField(int sample_bound = 9) : bound_(sample_bound) {}

  std::string name() const { return "Q"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return Elem(v); }
  Elem from_bigint(const BigInt& v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero in Q");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  template <class Rng>
  Elem random(Rng& rng) const {
    return Elem(std::uniform_int_distribution<int>(-bound_, bound_)(rng));
  }

  std::string str(const Elem& a) const { return a.str(); }

 private:
  int bound_;
};

}  // namespace grbraid
