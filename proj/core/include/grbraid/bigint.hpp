#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grbraid {

/// Arbitrary-precision integer used for all polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// Decimal rendering with an explicit sign ("+3", "-12").
inline std::string signed_decimal(const BigInt& value) {
  std::string s = value.str();
  if (value >= 0) s.insert(s.begin(), '+');
  return s;
}

/// Parses "[+-]digits"; throws std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& text);

}  // namespace grbraid
