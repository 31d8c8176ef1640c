#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vertexid/rational.hpp"
#include "vertexid/trunc_series.hpp"

namespace vertexid {

/// Dense row-major square matrix over a commutative ring R.
template <typename R>
class Matrix {
 public:
  Matrix(int order, const R& fill) : order_(order), entries_(static_cast<std::size_t>(order * order), fill) {
    if (order < 0) throw InvalidInput("negative matrix order");
  }

  int order() const { return order_; }
  R& operator()(int i, int j) { return entries_[index(i, j)]; }
  const R& operator()(int i, int j) const { return entries_[index(i, j)]; }

  bool is_antisymmetric() const {
    for (int i = 0; i < order_; ++i) {
      if (!((*this)(i, i) == zero_like((*this)(i, i)))) return false;
      for (int j = i + 1; j < order_; ++j) {
        if (!((*this)(i, j) == -(*this)(j, i))) return false;
      }
    }
    return true;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * order_ + j); }

  int order_;
  std::vector<R> entries_;
};

namespace detail {

inline void check_order(int n) {
  if (n > 20) throw InvalidInput("matrix order too large for subset expansion");
}

}  // namespace detail

/// Division-free determinant: Laplace expansion along successive rows with
/// the minors memoized by their column set, O(n 2^n) ring multiplications.
template <typename R>
R det_expansion(const Matrix<R>& m, const R& one) {
  const int n = m.order();
  if (n == 0) return one;
  detail::check_order(n);
  const std::uint32_t full = (1U << static_cast<unsigned>(n)) - 1U;
  std::vector<std::optional<R>> memo(static_cast<std::size_t>(full) + 1);
  memo[0] = one;
  // Minor on rows n-|S|..n-1 and the columns in S; built up by popcount.
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int row = n - std::popcount(s);
    std::optional<R> acc;
    int position = 0;
    for (int j = 0; j < n; ++j) {
      const std::uint32_t bit = 1U << static_cast<unsigned>(j);
      if ((s & bit) == 0) continue;
      const R& sub = *memo[s & ~bit];
      R term = m(row, j) * sub;
      if (position % 2 == 1) term = -term;
      if (acc) {
        *acc += term;
      } else {
        acc = std::move(term);
      }
      ++position;
    }
    memo[s] = std::move(acc);
  }
  return *memo[full];
}

/// Fraction-free Bareiss elimination; exact over Rational.
Rational det(const Matrix<Rational>& m);

/// Division-free; see det_expansion.
TruncSeries det(const Matrix<TruncSeries>& m);

/// Pfaffian by expansion along the first row with the sub-Pfaffians
/// memoized by their index set. Throws InvalidInput for odd order or a
/// matrix that is not antisymmetric.
template <typename R>
R pfaffian_expansion(const Matrix<R>& a, const R& one) {
  const int n = a.order();
  if (n % 2 != 0) throw InvalidInput("Pfaffian of odd order " + std::to_string(n));
  if (!a.is_antisymmetric()) throw InvalidInput("Pfaffian of a non-antisymmetric matrix");
  if (n == 0) return one;
  detail::check_order(n);
  const std::uint32_t full = (1U << static_cast<unsigned>(n)) - 1U;
  std::vector<std::optional<R>> memo(static_cast<std::size_t>(full) + 1);
  memo[0] = one;
  auto solve = [&](auto&& self, std::uint32_t s) -> const R& {
    auto& slot = memo[s];
    if (slot) return *slot;
    const int first = std::countr_zero(s);
    const std::uint32_t rest = s & ~(1U << static_cast<unsigned>(first));
    std::optional<R> acc;
    int position = 0;
    for (int j = first + 1; j < n; ++j) {
      const std::uint32_t bit = 1U << static_cast<unsigned>(j);
      if ((rest & bit) == 0) continue;
      R term = a(first, j) * self(self, rest & ~bit);
      if (position % 2 == 1) term = -term;
      if (acc) {
        *acc += term;
      } else {
        acc = std::move(term);
      }
      ++position;
    }
    slot = std::move(acc);
    return *slot;
  };
  return solve(solve, full);
}

Rational pfaffian(const Matrix<Rational>& a);
TruncSeries pfaffian(const Matrix<TruncSeries>& a);

}  // namespace vertexid
