#include "vertexid/rational.hpp"

#include <cctype>

namespace vertexid {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
      throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DegenerateSample("zero raised to a negative power");
    return 1 / pow(base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

Rational vandermonde(std::span<const Rational> xs) {
  Rational v = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
  }
  return v;
}

bool all_distinct(std::span<const Rational> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

}  // namespace vertexid
