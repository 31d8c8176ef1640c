#include <doctest.h>

#include "vertexid/matrix.hpp"
#include "vertexid/rational.hpp"
#include "vertexid/sampling.hpp"
#include "vertexid/trunc_series.hpp"

using namespace vertexid;

namespace {

Monomial mono(std::initializer_list<int> exps) {
  std::vector<int> e(exps);
  return Monomial(e);
}

TruncSeries random_series(Sampler& s, int k, int cutoff) {
  TruncSeries f(k, cutoff);
  for (int term = 0; term < 5; ++term) {
    Monomial m;
    int budget = static_cast<int>(s.next_raw() % static_cast<std::uint64_t>(cutoff + 1));
    for (int v = 0; v < k && budget > 0; ++v) {
      const int e = static_cast<int>(s.next_raw() % static_cast<std::uint64_t>(budget + 1));
      m.set(v, e);
      budget -= e;
    }
    f.add_term(m, s.next());
  }
  return f;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rationals stay canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("0.5"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
    CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK_THROWS(pow(Rational(0), -1));
  }

  TEST_CASE("geometric series") {
    CHECK(TruncSeries::geometric(1, 4, 0, 0) == TruncSeries::constant(1, 4, 1));

    TruncSeries expected(1, 2);
    expected.add_term(mono({0}), 1);
    expected.add_term(mono({1}), 1);
    expected.add_term(mono({2}), 1);
    CHECK(TruncSeries::geometric(1, 2, 0, 1) == expected);

    TruncSeries half(2, 3);
    half.add_term(mono({0, 0}), 1);
    half.add_term(mono({0, 1}), make_rational(1, 2));
    half.add_term(mono({0, 2}), make_rational(1, 4));
    half.add_term(mono({0, 3}), make_rational(1, 8));
    CHECK(TruncSeries::geometric(2, 3, 1, make_rational(1, 2)) == half);
    CHECK(half.to_string() == "1 + 1/2*X2 + 1/4*X2^2 + 1/8*X2^3");
  }

  TEST_CASE("geometric series inverts 1 - cX") {
    for (int cutoff = 0; cutoff <= 6; ++cutoff) {
      const Rational c = make_rational(-3, 7);
      TruncSeries line = TruncSeries::constant(3, cutoff, 1) - TruncSeries::variable(3, cutoff, 1, c);
      CHECK(TruncSeries::geometric(3, cutoff, 1, c) * line == TruncSeries::constant(3, cutoff, 1));
      CHECK(line.inverse() == TruncSeries::geometric(3, cutoff, 1, c));
    }
  }

  TEST_CASE("series products are commutative and associative") {
    Sampler s(42);
    for (int trial = 0; trial < 20; ++trial) {
      auto f = random_series(s, 3, 5), g = random_series(s, 3, 5), h = random_series(s, 3, 5);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      const TruncSeries fg = f * g;
      for (const auto& [m, c] : fg.terms()) {
        CHECK(m.degree() <= 5);
        CHECK(c != 0);
      }
    }
  }

  TEST_CASE("mismatched rings are rejected") {
    CHECK_THROWS_AS(TruncSeries(2, 3) + TruncSeries(2, 4), InvalidInput);
    CHECK_THROWS_AS(TruncSeries(2, 3) * TruncSeries(3, 3), InvalidInput);
  }

  TEST_CASE("small determinants") {
    Matrix<Rational> one(1, make_rational(5, 3));
    CHECK(det(one) == make_rational(5, 3));
    Matrix<Rational> m(2, 0);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    CHECK(det(m) == -2);
    CHECK(det(Matrix<Rational>(0, 0)) == 1);
  }

  TEST_CASE("Cauchy matrix determinant") {
    const std::vector<Rational> x{make_rational(1, 2), make_rational(1, 3)};
    const std::vector<Rational> y{make_rational(1, 5), make_rational(1, 7)};
    Matrix<Rational> c(2, 0);
    Rational prod = 1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        c(i, j) = 1 / (1 - x[i] * y[j]);
        prod *= 1 - x[i] * y[j];
      }
    CHECK(det(c) == (x[0] - x[1]) * (y[0] - y[1]) / prod);
  }

  TEST_CASE("small Pfaffians") {
    Matrix<Rational> two(2, 0);
    two(0, 1) = make_rational(7, 2);
    two(1, 0) = -two(0, 1);
    CHECK(pfaffian(two) == make_rational(7, 2));

    Sampler s(3);
    Matrix<Rational> a(4, 0);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        a(i, j) = s.next();
        a(j, i) = -a(i, j);
      }
    CHECK(pfaffian(a) == a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2));

    CHECK_THROWS_AS(pfaffian(Matrix<Rational>(3, 0)), InvalidInput);
    Matrix<Rational> skewed(2, 0);
    skewed(0, 1) = 1;
    skewed(1, 0) = 1;
    CHECK_THROWS_AS(pfaffian(skewed), InvalidInput);
  }

  TEST_CASE("Stembridge Pfaffian at a fixed point") {
    const std::vector<Rational> x{make_rational(1, 2), make_rational(1, 3), make_rational(1, 5), make_rational(1, 7)};
    Matrix<Rational> a(4, 0);
    Rational prod = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        a(i, j) = (x[i] - x[j]) / (1 - x[i] * x[j]);
        a(j, i) = -a(i, j);
        prod *= a(i, j);
      }
    CHECK(pfaffian(a) == prod);
  }

  TEST_CASE("Pf^2 = det for random antisymmetric matrices") {
    Sampler s(11);
    for (int order = 0; order <= 6; order += 2) {
      for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rational> a(order, 0);
        for (int i = 0; i < order; ++i)
          for (int j = i + 1; j < order; ++j) {
            a(i, j) = s.next();
            a(j, i) = -a(i, j);
          }
        const Rational pf = pfaffian(a);
        CHECK(pf * pf == det(a));
      }
    }
  }

  TEST_CASE("series determinant reduces to the constant-term determinant") {
    Sampler s(5);
    for (int order = 1; order <= 4; ++order) {
      Matrix<TruncSeries> m(order, TruncSeries(2, 4));
      Matrix<Rational> c(order, 0);
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
          m(i, j) = random_series(s, 2, 4);
          c(i, j) = m(i, j).constant_term();
        }
      CHECK(det(m).constant_term() == det(c));
      const std::vector<Rational> zero{0, 0};
      CHECK(det(m).evaluate(zero) == det(c));
    }
  }

  TEST_CASE("series Pfaffian squares to the series determinant") {
    Sampler s(8);
    Matrix<TruncSeries> a(4, TruncSeries(2, 5));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        a(i, j) = random_series(s, 2, 5);
        a(j, i) = -a(i, j);
      }
    const TruncSeries pf = pfaffian(a);
    CHECK(pf * pf == det(a));
  }

  TEST_CASE("series Vandermonde") {
    const auto v = series_vandermonde(3, 3, 3);
    const std::vector<Rational> p{make_rational(1, 2), make_rational(-1, 3), 2};
    CHECK(v.evaluate(p) == vandermonde(p));
  }
}
