#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "vertexid/sampling.hpp"
#include "vertexid/symfunc.hpp"

using namespace vertexid;

namespace {

std::vector<Rational> rs(std::initializer_list<Rational> v) { return v; }

std::vector<Rational> y_point(Sampler& s, int n) {
  for (;;) {
    auto ys = s.distinct(n, {Rational(1), Rational(-1)});
    bool ok = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ok = ok && ys[i] * ys[j] != 1;
    if (ok) return ys;
  }
}

// Monomial expansion of h_k by brute force over exponent vectors.
Rational h_oracle(int k, const std::vector<Rational>& x, std::size_t from = 0) {
  if (from == x.size()) return k == 0 ? 1 : 0;
  Rational total = 0;
  for (int e = 0; e <= k; ++e) total += pow(x[from], e) * h_oracle(k - e, x, from + 1);
  return total;
}

}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("Schur polynomials") {
    const auto x = rs({make_rational(1, 2), make_rational(-2, 3)});
    CHECK(schur_eval(Partition{}, x) == 1);
    CHECK(schur_eval(Partition{1}, x) == x[0] + x[1]);
    CHECK(schur_eval(Partition{2, 1}, rs({1, 1, 1})) == 8);
    CHECK(schur_eval(Partition{1, 1, 1}, x) == 0);
    Sampler s(3);
    for (int n = 1; n <= 3; ++n) {
      auto p = s.distinct(n);
      for (const auto& l : enumerate_partitions(5, n)) {
        CHECK(schur_eval(l, p) == schur_tableau_eval(l, p));
        CHECK(schur_eval(l, p) == hl_eval(l, p, 0));
      }
    }
  }

  TEST_CASE("Hall-Littlewood evaluations") {
    const Rational t = make_rational(1, 5);
    const auto x = rs({make_rational(1, 2), make_rational(1, 3)});
    CHECK(hl_eval(Partition{1}, x, t) == x[0] + x[1]);
    CHECK(hl_eval(Partition{2}, x, t) == x[0] * x[0] + x[1] * x[1] + (1 - t) * x[0] * x[1]);
    CHECK(hl_branching_eval(Partition{2}, x, t) == hl_eval(Partition{2}, x, t));
    CHECK_THROWS_AS(hl_eval(Partition{1}, rs({1, 1}), t), DegenerateSample);
    CHECK(hl_branching_eval(Partition{1, 1}, rs({2, 2}), t) == 4);
  }

  TEST_CASE("Hall-Littlewood expansion") {
    const Rational t = make_rational(2, 9);
    TruncSeries x1x2(2, 2);
    Monomial m11;
    m11.set(0, 1);
    m11.set(1, 1);
    x1x2.add_term(m11, 1);
    CHECK(hl_expand(Partition{1, 1}, 2, t, 2) == x1x2);

    TruncSeries p2(2, 2);
    Monomial a, b;
    a.set(0, 2);
    b.set(1, 2);
    p2.add_term(a, 1);
    p2.add_term(b, 1);
    p2.add_term(m11, 1 - t);
    CHECK(hl_expand(Partition{2}, 2, t, 2) == p2);

    TruncSeries e1(3, 1);
    for (int v = 0; v < 3; ++v) e1 += TruncSeries::variable(3, 1, v);
    CHECK(hl_expand(Partition{1}, 3, 0, 1) == e1);
    CHECK_THROWS_AS(hl_expand(Partition{3}, 2, t, 2), InvalidInput);
  }

  TEST_CASE("expansion matches evaluation and is symmetric") {
    Sampler s(17);
    for (int n = 1; n <= 3; ++n) {
      HLExpander ex(n, make_rational(-3, 4), 5);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (const auto& l : enumerate_partitions(5, n)) {
        const auto& f = ex.expand(l);
        for (int k = 0; k < 3; ++k) {
          auto p = s.distinct(n);
          CHECK(f.evaluate(p) == hl_eval(l, p, ex.t()));
        }
        if (n >= 2) {
          std::vector<int> swap = perm;
          std::swap(swap[0], swap[1]);
          CHECK(f.permuted(swap) == f);
        }
        CHECK(f.is_symmetric());
      }
    }
  }

  TEST_CASE("expansion in the Hall-Littlewood basis") {
    const Rational t = make_rational(3, 7);
    TruncSeries e1 = TruncSeries::variable(2, 3, 0) + TruncSeries::variable(2, 3, 1);
    CHECK(expand_in_hl_basis(e1, t) == std::map<Partition, Rational>{{Partition{1}, 1}});
    CHECK(expand_in_hl_basis(TruncSeries::constant(2, 3, 1), t) == std::map<Partition, Rational>{{Partition{}, 1}});

    // s_2 = h_2 in two variables.
    TruncSeries s2(2, 2);
    for (int i = 0; i <= 2; ++i) {
      Monomial m;
      m.set(0, i);
      m.set(1, 2 - i);
      s2.add_term(m, 1);
    }
    CHECK(expand_in_hl_basis(s2, t) == std::map<Partition, Rational>{{Partition{2}, 1}, {Partition{1, 1}, t}});

    for (const auto& l : enumerate_partitions(5, 3))
      CHECK(expand_in_hl_basis(hl_expand(l, 3, t, 5), t) == std::map<Partition, Rational>{{l, 1}});

    CHECK_THROWS_AS(expand_in_hl_basis(TruncSeries::variable(2, 2, 0), t), InvalidInput);
  }

  TEST_CASE("Hall-Littlewood Cauchy identity") {
    Sampler s(23);
    for (int sample = 0; sample < 3; ++sample) {
      const Rational t = s.next();
      auto y = s.distinct(2);
      HLExpander ex(2, t, 6);
      TruncSeries lhs(2, 6);
      for (const auto& l : enumerate_partitions(6, 2))
        lhs.add_scaled(ex.expand(l), b_coeff(l, t, 0) * hl_eval(l, y, t));
      TruncSeries rhs = TruncSeries::constant(2, 6, 1);
      for (int i = 0; i < 2; ++i)
        for (const auto& yj : y) {
          TruncSeries num = TruncSeries::constant(2, 6, 1) - TruncSeries::variable(2, 6, i, t * yj);
          rhs *= num * TruncSeries::geometric(2, 6, i, yj);
        }
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("symplectic characters") {
    const Rational y = make_rational(5, 3);
    CHECK(sp_eval(Partition{}, rs({y})) == 1);
    CHECK(sp_eval(Partition{1}, rs({y})) == y + 1 / y);
    CHECK(sp_eval(Partition{1, 1}, rs({2, 3})) == make_rational(28, 3));
    CHECK(sp_tableau_eval(Partition{1, 1}, rs({2, 3})) == make_rational(28, 3));
    Sampler s(29);
    for (int n = 1; n <= 2; ++n)
      for (int k = 0; k < 3; ++k) {
        auto p = y_point(s, n);
        for (const auto& l : enumerate_partitions(4, n)) CHECK(sp_eval(l, p) == sp_tableau_eval(l, p));
      }
    CHECK_THROWS_AS(sp_eval(Partition{1}, rs({1})), DegenerateSample);
  }

  TEST_CASE("BC_n Hall-Littlewood polynomials") {
    const Rational y = make_rational(-4, 7), t = make_rational(2, 5);
    CHECK(bchl_eval(Partition{}, rs({y}), t) == 1);
    CHECK(bchl_eval(Partition{1}, rs({y}), t) == y + 1 / y);
    Sampler s(31);
    for (int n = 1; n <= 3; ++n) {
      auto p = y_point(s, n);
      for (const auto& l : enumerate_partitions(4, n)) CHECK(bchl_eval(l, p, 0) == sp_eval(l, p));
    }
    for (int k = 0; k < 3; ++k) {
      auto p = y_point(s, 2);
      const Rational tt = s.next();
      for (const auto& l : enumerate_partitions(3, 2)) {
        const Rational base = bchl_eval(l, p, tt);
        CHECK(bchl_eval(l, rs({1 / p[0], p[1]}), tt) == base);
        CHECK(bchl_eval(l, rs({p[1], p[0]}), tt) == base);
      }
    }
  }

  TEST_CASE("complete homogeneous polynomials") {
    const auto x = rs({make_rational(1, 2), make_rational(3, 4)});
    CHECK(h_complete_eval(0, x) == 1);
    CHECK(h_complete_eval(-1, x) == 0);
    CHECK(h_complete_eval(2, x) == x[0] * x[0] + x[0] * x[1] + x[1] * x[1]);
    Sampler s(37);
    for (int k = 0; k <= 5; ++k) {
      auto p = s.distinct(3);
      CHECK(h_complete_eval(k, p) == h_oracle(k, p));
    }
    auto p = s.distinct(4);
    const auto base = rs({p[0], p[1]});
    auto with = [&](std::initializer_list<Rational> extra) {
      auto v = base;
      v.insert(v.end(), extra);
      return v;
    };
    CHECK(h_complete_eval(3, with({p[2]})) - h_complete_eval(3, with({p[3]})) ==
          (p[2] - p[3]) * h_complete_eval(2, with({p[2], p[3]})));
  }

  TEST_CASE("K-tilde coefficients") {
    const std::array<Rational, 4> zero{0, 0, 0, 0};
    const auto z = rs({2, make_rational(1, 2)});
    const Rational t = make_rational(1, 3);
    const auto low = ktilde_coeffs(z, t, zero, 2, 3);
    const auto high = ktilde_coeffs(z, t, zero, 2, 4);
    CHECK(low.at(Partition{}) == 1);
    CHECK(low.at(Partition{1}) == high.at(Partition{1}));

    Sampler s(41);
    for (int n = 1; n <= 3; ++n) {
      auto y = y_point(s, n);
      std::vector<Rational> zz;
      for (const auto& v : y) {
        zz.push_back(v);
        zz.push_back(1 / v);
      }
      const auto c = ktilde_coeffs(zz, 0, zero, n, 4);
      for (const auto& l : enumerate_partitions(4, n)) CHECK(c.at(l) == sp_eval(l, y));
    }
  }
}
