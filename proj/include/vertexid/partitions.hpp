#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vertexid/rational.hpp"

namespace vertexid {

/// Integer partition, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Accepts a weakly decreasing sequence of nonnegative integers; trailing
  /// zeros are dropped. Throws InvalidInput otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// lambda_{i+1} for 0-based i; zero beyond the length.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  /// m_i: number of parts equal to i, for i >= 1.
  int multiplicity(int i) const;

  /// "(3,1)", or "()" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// True iff lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool interlaces(const Partition& lambda, const Partition& mu);

/// True iff every part of the conjugate is even.
bool has_even_columns(const Partition& lambda);

/// All partitions with |lambda| <= max_weight and length <= max_length,
/// ordered by weight and then lexicographically descending.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length);

/// Partitions of exactly `weight` with at most `max_length` parts, in
/// lexicographically descending order.
std::vector<Partition> partitions_of(int weight, int max_length);

/// All mu with lambda interlacing mu (lambda over mu), i.e. mu obtained by
/// removing a horizontal strip.
std::vector<Partition> strips_below(const Partition& lambda);

/// All nu interlacing over mu with length at most max_length and weight at
/// most max_weight.
std::vector<Partition> strips_above(const Partition& mu, int max_length, int max_weight);

/// prod_{i>=1} prod_{j=1}^{m_i} (1 - t^j); with zero_parts = n > 0 the i = 0
/// factor with m_0 = n - length is included as well.
Rational b_coeff(const Partition& lambda, const Rational& t, int zero_parts);

/// prod_{i>=0} prod_{j=1}^{m_i} (1 - t^j)/(1 - t) with m_0 = n - length.
Rational v_coeff(const Partition& lambda, const Rational& t, int n);

/// prod over i >= 1 with m_i(mu) = m_i(lambda) + 1 of (1 - t^{m_i(mu)}).
/// Throws InvalidInput unless lambda interlaces mu.
Rational psi_coeff(const Partition& lambda, const Partition& mu, const Rational& t);

/// prod_i prod_{j=2,4,...}^{m_i} (1 - t^{j-1}). When total_variables > 0
/// the i = 0 factor with m_0 = total_variables - length is included.
Rational even_column_coeff(const Partition& lambda, const Rational& t, int total_variables);

}  // namespace vertexid
