#include <doctest.h>

#include "vertexid/latticepf.hpp"
#include "vertexid/macdiff.hpp"
#include "vertexid/sampling.hpp"
#include "vertexid/symfunc.hpp"

using namespace vertexid;

TEST_SUITE("macdiff") {
  TEST_CASE("one variable and z = 0") {
    Evaluator f = [](std::span<const Rational> x) -> Rational { return x[0] * x[0] + 3; };
    const Rational a = make_rational(2, 5), z = make_rational(-1, 4), q = make_rational(3, 7);
    const std::vector<Rational> p{a};
    CHECK(apply_Dn(f, z, q, make_rational(1, 3), p) == f(p) + z * (q * q * a * a + 3));

    Evaluator g = [](std::span<const Rational> x) -> Rational { return x[0] - 2 * x[1] * x[2]; };
    const std::vector<Rational> pt{make_rational(1, 2), make_rational(-1, 3), make_rational(4, 5)};
    CHECK(apply_Dn(g, 0, q, make_rational(1, 3), pt) == g(pt));
  }

  TEST_CASE("linearity") {
    Sampler s(2);
    Evaluator f = [](std::span<const Rational> x) -> Rational { return x[0] * x[1] + x[2]; };
    Evaluator g = [](std::span<const Rational> x) -> Rational { return x[0] * x[0] * x[2] - 1; };
    Evaluator sum = [&](std::span<const Rational> x) -> Rational { return f(x) + g(x); };
    for (int k = 0; k < 3; ++k) {
      auto p = s.distinct(3);
      const Rational z = s.next(), q = s.next(), t = s.next();
      CHECK(apply_Dn(sum, z, q, t, p) == apply_Dn(f, z, q, t, p) + apply_Dn(g, z, q, t, p));
    }
  }

  TEST_CASE("coincident coordinates are rejected") {
    Evaluator one = [](std::span<const Rational>) -> Rational { return 1; };
    const std::vector<Rational> p{1, 1};
    CHECK_THROWS_AS(apply_Dn(one, 1, 0, 2, p), DegenerateSample);
  }

  TEST_CASE("eigenvalues") {
    const Rational t = make_rational(2, 3), z = make_rational(-5, 2);
    Evaluator one = [](std::span<const Rational>) -> Rational { return 1; };
    Evaluator e1 = [](std::span<const Rational> x) -> Rational { return x[0] + x[1]; };
    Sampler s(6);
    for (int k = 0; k < 3; ++k) {
      auto p = s.distinct(2);
      CHECK(apply_Dn(one, z, t, t, p) == (1 + z * t) * (1 + z));
      CHECK(apply_Dn(e1, z, t, t, p) == (1 + z * t * t) * (1 + z) * e1(p));
      CHECK(apply_Dn(e1, -t, 0, t, p) == (1 - t) * e1(p));
    }
    CHECK(macdonald_eigenvalue(Partition{1}, 2, -t, 0, t) == 1 - t);
    CHECK(macdonald_eigenvalue(Partition{}, 3, z, t, t) == (1 + z * t * t) * (1 + z * t) * (1 + z));

    CHECK(eigen_check(Partition{2, 1}, 3, z, t, t, 3));
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : enumerate_partitions(4, n)) {
        CHECK(eigen_check(l, n, z, t, t, 3, 5));
        CHECK(eigen_check(l, n, z, 0, t, 3, 5));
      }
    CHECK_THROWS_AS(eigen_check(Partition{1}, 2, z, make_rational(1, 9), t, 1), InvalidInput);
  }

  TEST_CASE("operator on the Cauchy kernel gives the domain wall partition function") {
    Sampler s(14);
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k < 3; ++k) {
        const Rational t = s.next();
        auto x = s.distinct(n);
        auto y = s.distinct(n, x);
        Evaluator kernel = [&](std::span<const Rational> p) -> Rational {
          Rational r = 1;
          for (const auto& a : p)
            for (const auto& b : y) r *= (1 - t * a * b) / (1 - a * b);
          return r;
        };
        bool pole = false;
        for (const auto& a : x)
          for (const auto& b : y) pole = pole || a * b == 1 || t * a * b == 1;
        if (pole) continue;
        CHECK(apply_Dn(kernel, -t, 0, t, x) == z_asm_closed(x, y, t));
      }
  }
}
