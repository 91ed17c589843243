#include "skel/rational.hpp"

#include "skel/error.hpp"

#include <cctype>
#include <limits>

namespace skel {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    throw Error(ErrorCode::InvalidValue, "malformed rational \"" + std::string(whole) + "\"");
  Integer value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::InvalidValue, "malformed rational \"" + std::string(whole) + "\"");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  Integer num = parse_integer(rest.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) den = parse_integer(rest.substr(slash + 1), text);
  if (den == 0)
    throw Error(ErrorCode::InvalidValue, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q))
    throw Error(ErrorCode::InvalidValue, to_string(q) + " is not an integer");
  const Integer n = numer(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::InvalidValue, to_string(q) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(n);
}

}  // namespace skel
