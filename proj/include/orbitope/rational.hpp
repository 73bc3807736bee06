#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace orbitope {

// Expression templates off: Eigen stores and copies scalars by value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional sign, surrounding whitespace ignored).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, with "/q" omitted when q = 1.
std::string to_string(const Rational& q);

Integer parse_integer(std::string_view text);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace orbitope
