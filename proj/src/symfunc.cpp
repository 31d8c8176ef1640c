#include "vertexid/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vertexid/matrix.hpp"

namespace vertexid {

namespace {

Monomial partition_monomial(const Partition& lambda) {
  Monomial m;
  for (int i = 0; i < lambda.length(); ++i) m.set(i, lambda.part(i));
  return m;
}

Monomial single_power(int var, int exponent) {
  Monomial m;
  m.set(var, exponent);
  return m;
}

Rational nonzero_v(const Partition& lambda, const Rational& t, int n) {
  Rational v = v_coeff(lambda, t, n);
  if (v == 0) throw DegenerateSample("v_lambda(t) vanishes at t = " + to_string(t));
  return v;
}

}  // namespace

Rational schur_eval(const Partition& lambda, std::span<const Rational> x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  if (n == 0) return 1;
  if (!all_distinct(x)) return schur_tableau_eval(lambda, x);
  Matrix<Rational> a(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = pow(x[static_cast<std::size_t>(i)], lambda.part(j) - j - 1 + n);
  }
  return det(a) / vandermonde(x);
}

Rational schur_tableau_eval(const Partition& lambda, std::span<const Rational> x) {
  return hl_branching_eval(lambda, x, 0);
}

Rational hl_branching_eval(const Partition& lambda, std::span<const Rational> x, const Rational& t) {
  std::map<std::pair<Partition, int>, Rational> memo;
  auto eval = [&](auto&& self, const Partition& nu, int k) -> Rational {
    if (nu.length() > k) return 0;
    if (k == 0) return 1;
    const auto key = std::make_pair(nu, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational total = 0;
    for (const auto& mu : strips_below(nu)) {
      if (mu.length() > k - 1) continue;
      total += psi_coeff(nu, mu, t) * pow(x[static_cast<std::size_t>(k - 1)], nu.weight() - mu.weight()) *
               self(self, mu, k - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return eval(eval, lambda, static_cast<int>(x.size()));
}

Rational hl_eval(const Partition& lambda, std::span<const Rational> x, const Rational& t) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  if (!all_distinct(x)) throw DegenerateSample("Hall-Littlewood symmetrization needs distinct x values");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (int i = 0; i < n; ++i) {
      const Rational& zi = x[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
      term *= pow(zi, lambda.part(i));
      for (int j = i + 1; j < n; ++j) {
        const Rational& zj = x[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
        term *= (zi - t * zj) / (zi - zj);
      }
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total / nonzero_v(lambda, t, n);
}

HLExpander::HLExpander(int n, const Rational& t, int cutoff) : n_(n), t_(t), cutoff_(cutoff) {
  if (n < 0 || n > kMaxSeriesVariables) throw InvalidInput("variable count out of range");
  if (cutoff < 0) throw InvalidInput("negative cutoff");
}

const TruncSeries& HLExpander::expand(const Partition& lambda, int k) {
  if (k < 0 || k > n_) throw InvalidInput("variable prefix out of range");
  if (lambda.weight() > cutoff_) {
    throw InvalidInput("|" + lambda.to_string() + "| exceeds cutoff " + std::to_string(cutoff_));
  }
  const auto key = std::make_pair(lambda, k);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  TruncSeries result(n_, cutoff_);
  if (lambda.length() <= k) {
    if (k == 0) {
      result = TruncSeries::constant(n_, cutoff_, 1);
    } else {
      for (const auto& mu : strips_below(lambda)) {
        if (mu.length() > k - 1) continue;
        const TruncSeries& lower = expand(mu, k - 1);
        result += lower.times_monomial(single_power(k - 1, lambda.weight() - mu.weight()),
                                       psi_coeff(lambda, mu, t_));
      }
    }
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

TruncSeries hl_expand(const Partition& lambda, int n, const Rational& t, int cutoff) {
  if (lambda.length() > n) throw InvalidInput("partition longer than variable count");
  HLExpander expander(n, t, cutoff);
  return expander.expand(lambda);
}

Rational sp_eval(const Partition& lambda, std::span<const Rational> y) {
  const int n = static_cast<int>(y.size());
  if (lambda.length() > n) return 0;
  if (n == 0) return 1;
  Rational denominator = 1;
  for (int i = 0; i < n; ++i) {
    const Rational& yi = y[static_cast<std::size_t>(i)];
    if (yi == 0) throw DegenerateSample("symplectic variable equal to zero");
    denominator *= yi - 1 / yi;
    for (int j = i + 1; j < n; ++j) {
      const Rational& yj = y[static_cast<std::size_t>(j)];
      denominator *= (yi - yj) * (1 - 1 / (yi * yj));
    }
  }
  if (denominator == 0) throw DegenerateSample("symplectic Weyl denominator vanishes");
  Matrix<Rational> a(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int e = lambda.part(j) - j + n;
      a(i, j) = pow(y[static_cast<std::size_t>(i)], e) - pow(y[static_cast<std::size_t>(i)], -e);
    }
  }
  return det(a) / denominator;
}

Rational sp_tableau_eval(const Partition& lambda, std::span<const Rational> y) {
  const int n = static_cast<int>(y.size());
  if (lambda.length() > n) return 0;
  for (const auto& v : y) {
    if (v == 0) throw DegenerateSample("symplectic variable equal to zero");
  }
  // f(nu, k): sum over chains ending at the shape filled by 1..kbar.
  std::map<std::pair<Partition, int>, Rational> memo;
  auto eval = [&](auto&& self, const Partition& nu, int k) -> Rational {
    if (nu.length() > k) return 0;
    if (k == 0) return 1;
    const auto key = std::make_pair(nu, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Rational& yk = y[static_cast<std::size_t>(k - 1)];
    Rational total = 0;
    for (const auto& rho : strips_below(nu)) {
      for (const auto& sigma : strips_below(rho)) {
        if (sigma.length() > k - 1) continue;
        total += pow(yk, 2 * rho.weight() - nu.weight() - sigma.weight()) * self(self, sigma, k - 1);
      }
    }
    memo.emplace(key, total);
    return total;
  };
  return eval(eval, lambda, n);
}

Rational bchl_eval(const Partition& lambda, std::span<const Rational> y, const Rational& t) {
  const int n = static_cast<int>(y.size());
  if (lambda.length() > n) return 0;
  for (const auto& v : y) {
    if (v == 0) throw DegenerateSample("BC_n variable equal to zero");
  }
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Rational> z(static_cast<std::size_t>(n));
  Rational total = 0;
  do {
    for (std::uint32_t signs = 0; signs < (1U << static_cast<unsigned>(n)); ++signs) {
      for (int i = 0; i < n; ++i) {
        const Rational& v = y[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
        z[static_cast<std::size_t>(i)] = ((signs >> static_cast<unsigned>(i)) & 1U) != 0 ? Rational(1 / v) : v;
      }
      Rational term = 1;
      for (int i = 0; i < n; ++i) {
        const Rational& zi = z[static_cast<std::size_t>(i)];
        const Rational zbar_i = 1 / zi;
        const Rational d = 1 - zbar_i * zbar_i;
        if (d == 0) throw DegenerateSample("BC_n sample with y_i^2 = 1");
        term *= pow(zi, lambda.part(i)) / d;
        for (int j = i + 1; j < n; ++j) {
          const Rational& zj = z[static_cast<std::size_t>(j)];
          const Rational zbar_j = 1 / zj;
          const Rational den = (zi - zj) * (1 - zbar_i * zbar_j);
          if (den == 0) throw DegenerateSample("BC_n sample with y_i = y_j^{+-1}");
          term *= (zi - t * zj) * (1 - t * zbar_i * zbar_j) / den;
        }
      }
      total += term;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total / nonzero_v(lambda, t, n);
}

Rational h_complete_eval(int k, std::span<const Rational> x) {
  if (k < 0) return 0;
  // h[d] over the variables processed so far.
  std::vector<Rational> h(static_cast<std::size_t>(k) + 1, Rational(0));
  h[0] = 1;
  for (const auto& xi : x) {
    for (int d = 1; d <= k; ++d) h[static_cast<std::size_t>(d)] += xi * h[static_cast<std::size_t>(d) - 1];
  }
  return h[static_cast<std::size_t>(k)];
}

std::map<Partition, Rational> expand_in_hl_basis(const TruncSeries& f, const Rational& t) {
  if (!f.is_symmetric()) throw InvalidInput("series is not symmetric in its variables");
  const int n = f.variables();
  HLExpander expander(n, t, f.cutoff());
  std::map<Partition, Rational> coefficients;
  TruncSeries remainder = f;
  for (int w = 0; w <= f.cutoff(); ++w) {
    for (const auto& lambda : partitions_of(w, n)) {
      const Rational c = remainder.coefficient(partition_monomial(lambda));
      if (c == 0) continue;
      coefficients.emplace(lambda, c);
      remainder.add_scaled(expander.expand(lambda), -c);
    }
  }
  if (!remainder.is_zero()) throw std::logic_error("Hall-Littlewood elimination left a nonzero remainder");
  return coefficients;
}

TruncSeries ktilde_kernel(std::span<const Rational> z, const Rational& t, const std::array<Rational, 4>& aux,
                          int m, int cutoff) {
  TruncSeries kernel = TruncSeries::constant(m, cutoff, 1);
  for (int i = 0; i < m; ++i) {
    const Monomial xi = single_power(i, 1);
    for (const auto& zj : z) {
      kernel *= TruncSeries::geometric(m, cutoff, i, zj);
      kernel.add_scaled(kernel.times_monomial(xi), -t * zj);
    }
    for (int j = i + 1; j < m; ++j) {
      const Monomial xixj = xi * single_power(j, 1);
      kernel *= TruncSeries::geometric(m, cutoff, xixj, t);
      kernel.add_scaled(kernel.times_monomial(xixj), -1);
    }
    for (const auto& ta : aux) kernel.add_scaled(kernel.times_monomial(xi), -ta);
    kernel *= TruncSeries::geometric(m, cutoff, single_power(i, 2), t);
  }
  return kernel;
}

std::map<Partition, Rational> ktilde_coeffs(std::span<const Rational> z, const Rational& t,
                                            const std::array<Rational, 4>& aux, int m, int cutoff) {
  auto extract = [&](int d) {
    const auto c = expand_in_hl_basis(ktilde_kernel(z, t, aux, m, d), t);
    std::map<Partition, Rational> out;
    for (const auto& lambda : enumerate_partitions(cutoff, m)) {
      const auto it = c.find(lambda);
      if (it == c.end()) {
        out.emplace(lambda, 0);
        continue;
      }
      const Rational b = b_coeff(lambda, t, 0);
      if (b == 0) throw DegenerateSample("b_lambda(t) vanishes at t = " + to_string(t));
      out.emplace(lambda, it->second / b);
    }
    return out;
  };
  auto result = extract(cutoff);
  if (extract(cutoff + 1) != result) throw std::logic_error("K-tilde coefficients are not stable under the cutoff");
  return result;
}

}  // namespace vertexid
