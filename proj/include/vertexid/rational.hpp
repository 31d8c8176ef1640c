#pragma once

// Exact rational scalars. Every value that enters a computation (sampled
// rapidities, t, q, the auxiliary t0..t3) is held as a GMP rational, which
// is kept in lowest terms with a positive denominator after every operation.

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vertexid {

using Rational = mpq_class;
using Integer = mpz_class;

/// Input that violates an operation's precondition (odd Pfaffian order,
/// non-interlacing pair, malformed literal, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sample point that hits a pole or a vanishing denominator of the
/// formula being evaluated.
class DegenerateSample : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p", "-p" or "p/q". Throws InvalidInput on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// value^exponent; negative exponents require a nonzero base.
Rational pow(const Rational& base, int exponent);

/// Vandermonde product prod_{i<j} (x_i - x_j).
Rational vandermonde(std::span<const Rational> xs);

bool all_distinct(std::span<const Rational> xs);

}  // namespace vertexid
