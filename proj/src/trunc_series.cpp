#include "vertexid/trunc_series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace vertexid {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxSeriesVariables) throw InvalidInput("too many variables for Monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

void Monomial::set(int var, int exponent) {
  if (var < 0 || var >= kMaxSeriesVariables) throw InvalidInput("variable index out of range");
  if (exponent < 0 || exponent > 255) throw InvalidInput("exponent out of range");
  exps_[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(exponent);
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxSeriesVariables; ++i) {
    m.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] + b.exps_[i]);
  }
  return m;
}

namespace {

std::uint64_t pack(const Monomial& m) {
  std::uint64_t key = 0;
  for (int i = kMaxSeriesVariables - 1; i >= 0; --i) key = (key << 8U) | static_cast<std::uint64_t>(m[i]);
  return key;
}

Monomial unpack(std::uint64_t key) {
  Monomial m;
  for (int i = 0; i < kMaxSeriesVariables; ++i) {
    m.set(i, static_cast<int>(key & 0xFFU));
    key >>= 8U;
  }
  return m;
}

}  // namespace

TruncSeries::TruncSeries(int variables, int cutoff) : variables_(variables), cutoff_(cutoff) {
  if (variables < 0 || variables > kMaxSeriesVariables) throw InvalidInput("series variable count out of range");
  if (cutoff < 0) throw InvalidInput("series cutoff must be nonnegative");
}

TruncSeries TruncSeries::constant(int variables, int cutoff, const Rational& c) {
  TruncSeries s(variables, cutoff);
  s.add_term(Monomial{}, c);
  return s;
}

TruncSeries TruncSeries::variable(int variables, int cutoff, int var, const Rational& c) {
  if (var < 0 || var >= variables) throw InvalidInput("variable index out of range");
  Monomial m;
  m.set(var, 1);
  return monomial(variables, cutoff, m, c);
}

TruncSeries TruncSeries::monomial(int variables, int cutoff, const Monomial& m, const Rational& c) {
  TruncSeries s(variables, cutoff);
  s.add_term(m, c);
  return s;
}

TruncSeries TruncSeries::geometric(int variables, int cutoff, int var, const Rational& c) {
  if (var < 0 || var >= variables) throw InvalidInput("variable index out of range");
  TruncSeries s(variables, cutoff);
  Rational power = 1;
  for (int j = 0; j <= cutoff; ++j) {
    Monomial m;
    m.set(var, j);
    s.add_term(m, power);
    power *= c;
  }
  return s;
}

TruncSeries TruncSeries::geometric(int variables, int cutoff, const Monomial& m, const Rational& c) {
  const int d = m.degree();
  if (d <= 0) throw InvalidInput("geometric series needs a monomial of positive degree");
  TruncSeries s(variables, cutoff);
  Monomial power;
  Rational coefficient = 1;
  for (int j = 0; j * d <= cutoff; ++j) {
    s.add_term(power, coefficient);
    power = power * m;
    coefficient *= c;
  }
  return s;
}

Rational TruncSeries::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::constant_term() const { return coefficient(Monomial{}); }

void TruncSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || m.degree() > cutoff_) return;
  for (int i = variables_; i < kMaxSeriesVariables; ++i) {
    if (m[i] != 0) throw InvalidInput("monomial uses a variable outside the series");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncSeries::require_compatible(const TruncSeries& other) const {
  if (variables_ != other.variables_ || cutoff_ != other.cutoff_) {
    throw InvalidInput("series shapes differ: (" + std::to_string(variables_) + "," +
                       std::to_string(cutoff_) + ") vs (" + std::to_string(other.variables_) + "," +
                       std::to_string(other.cutoff_) + ")");
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& other) {
  *this = *this * other;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void TruncSeries::add_scaled(const TruncSeries& other, const Rational& c) {
  require_compatible(other);
  if (c == 0) return;
  Rational product;
  for (const auto& [m, v] : other.terms_) {
    mpq_mul(product.get_mpq_t(), v.get_mpq_t(), c.get_mpq_t());
    add_term(m, product);
  }
}

TruncSeries TruncSeries::times_monomial(const Monomial& m, const Rational& c) const {
  TruncSeries s(variables_, cutoff_);
  if (c == 0) return s;
  const int shift = m.degree();
  for (const auto& [key, v] : terms_) {
    if (key.degree() + shift > cutoff_) continue;
    s.add_term(key * m, v * c);
  }
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_compatible(b);
  TruncSeries result(a.variables_, a.cutoff_);
  if (a.is_zero() || b.is_zero()) return result;

  struct Term {
    Monomial m;
    int degree;
    const Rational* c;
  };
  auto by_degree = [](const TruncSeries& s) {
    std::vector<Term> v;
    v.reserve(s.terms_.size());
    for (const auto& [m, c] : s.terms_) v.push_back({m, m.degree(), &c});
    std::stable_sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.degree < y.degree; });
    return v;
  };
  const auto lhs = by_degree(a);
  const auto rhs = by_degree(b);

  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(lhs.size() * 4);
  Rational product;
  for (const auto& x : lhs) {
    const int budget = a.cutoff_ - x.degree;
    if (budget < 0) break;
    for (const auto& y : rhs) {
      if (y.degree > budget) break;
      mpq_mul(product.get_mpq_t(), x.c->get_mpq_t(), y.c->get_mpq_t());
      auto [it, inserted] = acc.try_emplace(pack(x.m * y.m), product);
      if (!inserted) it->second += product;
    }
  }
  for (auto& [key, c] : acc) {
    if (c != 0) result.terms_.emplace(unpack(key), std::move(c));
  }
  return result;
}

TruncSeries operator-(TruncSeries a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.variables_ == b.variables_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
}

TruncSeries TruncSeries::inverse() const {
  const Rational c0 = constant_term();
  if (c0 == 0) throw InvalidInput("series with zero constant term is not invertible");
  // 1/f = (1/c0) * sum_k u^k with u = 1 - f/c0, which has no constant term.
  TruncSeries u = one_like(*this) - (*this) * (1 / c0);
  TruncSeries result = one_like(*this);
  TruncSeries power = one_like(*this);
  for (int k = 1; k <= cutoff_; ++k) {
    power *= u;
    if (power.is_zero()) break;
    result += power;
  }
  return result * (1 / c0);
}

TruncSeries TruncSeries::truncated(int new_cutoff) const {
  TruncSeries s(variables_, new_cutoff);
  for (const auto& [m, c] : terms_) s.add_term(m, c);
  return s;
}

TruncSeries TruncSeries::homogeneous_part(int degree) const {
  TruncSeries s(variables_, cutoff_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) s.terms_.emplace(m, c);
  }
  return s;
}

TruncSeries TruncSeries::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != variables_) throw InvalidInput("permutation size mismatch");
  TruncSeries s(variables_, cutoff_);
  for (const auto& [m, c] : terms_) {
    Monomial image;
    for (int i = 0; i < variables_; ++i) image.set(perm[static_cast<std::size_t>(i)], m[i]);
    s.terms_.emplace(image, c);
  }
  return s;
}

bool TruncSeries::is_symmetric() const {
  // Adjacent transpositions generate the symmetric group.
  std::vector<int> perm(static_cast<std::size_t>(variables_));
  for (int i = 0; i + 1 < variables_; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    if (permuted(perm) != *this) return false;
  }
  return true;
}

Rational TruncSeries::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != variables_) throw InvalidInput("evaluation point size mismatch");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < variables_; ++i) {
      if (m[i] != 0) term *= pow(point[static_cast<std::size_t>(i)], m[i]);
    }
    total += term;
  }
  return total;
}

std::string TruncSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool unit = (m == Monomial{});
    if (unit || c != 1) out << vertexid::to_string(c);
    bool need_star = !unit && c != 1;
    for (int i = 0; i < variables_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << 'X' << (i + 1);
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

TruncSeries zero_like(const TruncSeries& sample) { return TruncSeries(sample.variables(), sample.cutoff()); }

TruncSeries one_like(const TruncSeries& sample) {
  return TruncSeries::constant(sample.variables(), sample.cutoff(), 1);
}

TruncSeries series_vandermonde(int variables, int cutoff, int count) {
  TruncSeries v = TruncSeries::constant(variables, cutoff, 1);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      v *= TruncSeries::variable(variables, cutoff, i) - TruncSeries::variable(variables, cutoff, j);
    }
  }
  return v;
}

}  // namespace vertexid
