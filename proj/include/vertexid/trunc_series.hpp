#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vertexid/rational.hpp"

namespace vertexid {

inline constexpr int kMaxSeriesVariables = 8;

/// Dense exponent vector over at most kMaxSeriesVariables formal variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  int operator[](int var) const { return exps_[static_cast<std::size_t>(var)]; }
  void set(int var, int exponent);
  int degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxSeriesVariables> exps_{};
};

/// Polynomial in X_0..X_{k-1} over Rational truncated at total degree D.
/// Never stores a zero coefficient or a term of degree > D. Binary
/// operations require both operands to share (k, D).
class TruncSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  TruncSeries(int variables, int cutoff);

  static TruncSeries constant(int variables, int cutoff, const Rational& c);
  /// c * X_var
  static TruncSeries variable(int variables, int cutoff, int var, const Rational& c = 1);
  static TruncSeries monomial(int variables, int cutoff, const Monomial& m, const Rational& c = 1);
  /// sum_{j=0}^{D} c^j X_var^j, the truncated expansion of 1/(1 - c X_var).
  static TruncSeries geometric(int variables, int cutoff, int var, const Rational& c);
  /// sum_{j>=0} c^j m^j for a monomial m of positive degree.
  static TruncSeries geometric(int variables, int cutoff, const Monomial& m, const Rational& c);

  int variables() const { return variables_; }
  int cutoff() const { return cutoff_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  void add_term(const Monomial& m, const Rational& c);

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const TruncSeries& other);
  TruncSeries& operator*=(const Rational& c);
  /// this += c * other
  void add_scaled(const TruncSeries& other, const Rational& c);
  /// c * m * this, computed by shifting exponents.
  TruncSeries times_monomial(const Monomial& m, const Rational& c = 1) const;

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator-(TruncSeries a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  /// Multiplicative inverse; the constant term must be nonzero.
  TruncSeries inverse() const;
  /// Same series with all terms of degree > new_cutoff dropped.
  TruncSeries truncated(int new_cutoff) const;
  TruncSeries homogeneous_part(int degree) const;
  /// Renames X_i to X_{perm[i]}.
  TruncSeries permuted(std::span<const int> perm) const;
  bool is_symmetric() const;
  /// Substitutes X_i = point[i]; exact.
  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text form, e.g. "1 + 1/2*X1 + X1^2*X2" (variables 1-based).
  std::string to_string() const;

 private:
  void require_compatible(const TruncSeries& other) const;

  int variables_;
  int cutoff_;
  TermMap terms_;
};

TruncSeries zero_like(const TruncSeries& sample);
TruncSeries one_like(const TruncSeries& sample);
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }

/// prod_{i<j} (X_i - X_j) over the first `count` variables.
TruncSeries series_vandermonde(int variables, int cutoff, int count);

}  // namespace vertexid
