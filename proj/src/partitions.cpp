#include "vertexid/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace vertexid {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidInput("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda.part(0); ++j) {
    int count = 0;
    while (count < lambda.length() && lambda.part(count) >= j) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool interlaces(const Partition& lambda, const Partition& mu) {
  const int n = std::max(lambda.length(), mu.length());
  for (int i = 0; i < n; ++i) {
    if (lambda.part(i) < mu.part(i)) return false;
    if (mu.part(i) < lambda.part(i + 1)) return false;
  }
  return true;
}

bool has_even_columns(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  const auto& parts = conj.parts();
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

namespace {

void descend(int remaining, int max_part, int slots, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    descend(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_length) {
  if (weight < 0 || max_length < 0) throw InvalidInput("negative partition bound");
  std::vector<Partition> out;
  std::vector<int> prefix;
  descend(weight, weight, max_length, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_weight, int max_length) {
  if (max_weight < 0 || max_length < 0) throw InvalidInput("negative partition bound");
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> strips_below(const Partition& lambda) {
  // mu_i ranges over [lambda_{i+1}, lambda_i] independently.
  std::vector<Partition> out;
  const int n = lambda.length();
  std::vector<int> mu(static_cast<std::size_t>(n));
  auto fill = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda.part(i); v >= lambda.part(i + 1); --v) {
      mu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<Partition> strips_above(const Partition& mu, int max_length, int max_weight) {
  // nu_1 >= mu_1, and mu_{i-1} >= nu_i >= mu_i for i >= 2.
  std::vector<Partition> out;
  const int n = std::min(max_length, mu.length() + 1);
  if (mu.length() > max_length) return out;
  std::vector<int> nu(static_cast<std::size_t>(n));
  const int base = mu.weight();
  auto fill = [&](auto&& self, int i, int extra) -> void {
    if (i == n) {
      out.emplace_back(nu);
      return;
    }
    const int low = mu.part(i);
    const int high = i == 0 ? low + (max_weight - base - extra) : std::min(mu.part(i - 1), low + (max_weight - base - extra));
    for (int v = low; v <= high; ++v) {
      nu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, extra + (v - low));
    }
  };
  if (base <= max_weight) fill(fill, 0, 0);
  return out;
}

namespace {

Rational one_minus_power(const Rational& t, int j) { return 1 - pow(t, j); }

// Multiplicities m_i for i >= 1, paired with the part value.
std::vector<std::pair<int, int>> multiplicities(const Partition& lambda) {
  std::vector<std::pair<int, int>> out;
  for (int p : lambda.parts()) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

Rational phi(int m, const Rational& t) {
  Rational r = 1;
  for (int j = 1; j <= m; ++j) r *= one_minus_power(t, j);
  return r;
}

}  // namespace

Rational b_coeff(const Partition& lambda, const Rational& t, int zero_parts) {
  if (zero_parts < 0) throw InvalidInput("negative zero-part count");
  if (zero_parts > 0 && lambda.length() > zero_parts) throw InvalidInput("partition longer than variable count");
  Rational r = zero_parts > 0 ? phi(zero_parts - lambda.length(), t) : Rational(1);
  for (const auto& [part, m] : multiplicities(lambda)) r *= phi(m, t);
  return r;
}

Rational v_coeff(const Partition& lambda, const Rational& t, int n) {
  if (lambda.length() > n) throw InvalidInput("partition longer than variable count");
  auto v = [&](int m) {
    Rational r = 1;
    for (int j = 1; j <= m; ++j) {
      Rational term = 0;
      for (int k = 0; k < j; ++k) term += pow(t, k);
      r *= term;
    }
    return r;
  };
  Rational r = v(n - lambda.length());
  for (const auto& [part, m] : multiplicities(lambda)) r *= v(m);
  return r;
}

Rational psi_coeff(const Partition& lambda, const Partition& mu, const Rational& t) {
  if (!interlaces(lambda, mu)) {
    throw InvalidInput(lambda.to_string() + " does not interlace " + mu.to_string());
  }
  Rational r = 1;
  for (const auto& [part, m] : multiplicities(mu)) {
    if (m == lambda.multiplicity(part) + 1) r *= one_minus_power(t, m);
  }
  return r;
}

Rational even_column_coeff(const Partition& lambda, const Rational& t, int total_variables) {
  auto factor = [&](int m) {
    Rational r = 1;
    for (int j = 2; j <= m; j += 2) r *= one_minus_power(t, j - 1);
    return r;
  };
  Rational r = 1;
  if (total_variables > 0) {
    if (lambda.length() > total_variables) throw InvalidInput("partition longer than variable count");
    r = factor(total_variables - lambda.length());
  }
  for (const auto& [part, m] : multiplicities(lambda)) r *= factor(m);
  return r;
}

}  // namespace vertexid
