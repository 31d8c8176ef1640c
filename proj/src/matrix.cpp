#include "vertexid/matrix.hpp"

namespace vertexid {

Rational det(const Matrix<Rational>& m) {
  const int n = m.order();
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  Rational sign = 1;
  Rational previous = 1;
  for (int k = 0; k + 1 < n; ++k) {
    auto& pivot_row = a[static_cast<std::size_t>(k)];
    if (pivot_row[static_cast<std::size_t>(k)] == 0) {
      int swap_with = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          swap_with = r;
          break;
        }
      }
      if (swap_with < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_with)]);
      sign = -sign;
    }
    const auto ks = static_cast<std::size_t>(k);
    for (std::size_t i = ks + 1; i < a.size(); ++i) {
      for (std::size_t j = ks + 1; j < a.size(); ++j) {
        a[i][j] = (a[i][j] * a[ks][ks] - a[i][ks] * a[ks][j]) / previous;
      }
      a[i][ks] = 0;
    }
    previous = a[ks][ks];
  }
  return sign * a.back().back();
}

TruncSeries det(const Matrix<TruncSeries>& m) {
  if (m.order() == 0) throw InvalidInput("determinant of an empty series matrix has no shape");
  return det_expansion(m, one_like(m(0, 0)));
}

Rational pfaffian(const Matrix<Rational>& a) { return pfaffian_expansion(a, Rational(1)); }

TruncSeries pfaffian(const Matrix<TruncSeries>& a) {
  if (a.order() == 0) throw InvalidInput("Pfaffian of an empty series matrix has no shape");
  return pfaffian_expansion(a, one_like(a(0, 0)));
}

}  // namespace vertexid
