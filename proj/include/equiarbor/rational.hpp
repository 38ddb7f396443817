#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace equiarbor {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts an optional sign, digits, and an optional "/q" with q > 0.
/// Throws ParseError.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long p, long long q = 1) {
  return Rational(BigInt(p), BigInt(q));
}

}  // namespace equiarbor
