#include "molp/rational.hpp"

#include <cctype>

#include "molp/errors.hpp"

namespace molp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Leading zeros are stripped so the digits are never read as octal.
Integer decimal_integer(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw ParseError("invalid rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_literal(text);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    Integer d = decimal_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(decimal_integer(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      bad_literal(text);
    }
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer digits = decimal_integer(std::string(whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) bad_literal(text);
    value = Rational(decimal_integer(body));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace molp
