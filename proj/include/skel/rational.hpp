#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace skel {

/// Arbitrary-precision exact rational; always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "a", "-a" or "a/b". Throws Error(InvalidValue) on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Converts an integral rational to int64; throws Error(InvalidValue) if the
/// value is not an integer or does not fit.
std::int64_t to_int64(const Rational& q);

}  // namespace skel
