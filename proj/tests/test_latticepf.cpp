#include <doctest.h>

#include <set>
#include <tuple>
#include <utility>

#include "vertexid/latticepf.hpp"
#include "vertexid/sampling.hpp"

using namespace vertexid;

namespace {

using Grid = std::vector<std::vector<int>>;

std::vector<Rational> rs(std::initializer_list<Rational> v) { return v; }

bool is_asm(const Grid& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += a[i][j];
      col += a[j][i];
      if (row < 0 || row > 1 || col < 0 || col > 1) return false;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

// All n x n alternating sign matrices, cell by cell with partial-sum pruning.
void asm_oracle(Grid& a, int cell, std::set<Grid>& out) {
  const int n = static_cast<int>(a.size());
  if (cell == n * n) {
    if (is_asm(a)) out.insert(a);
    return;
  }
  const int i = cell / n, j = cell % n;
  for (int v = -1; v <= 1; ++v) {
    a[i][j] = v;
    int row = 0, col = 0;
    for (int k = 0; k <= j; ++k) row += a[i][k];
    for (int k = 0; k <= i; ++k) col += a[k][j];
    if (row >= 0 && row <= 1 && col >= 0 && col <= 1) asm_oracle(a, cell + 1, out);
  }
  a[i][j] = 0;
}

// Evaluates `f` at fresh samples until no pole is hit.
template <class F>
auto generic(F f) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f();
    } catch (const DegenerateSample&) {
      if (attempt == 50) throw;
    }
  }
}

using Pair = std::pair<Rational, Rational>;

std::vector<Rational> y_point(Sampler& s, int n) {
  for (;;) {
    auto ys = s.distinct(n, {Rational(1), Rational(-1)});
    bool ok = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ok = ok && ys[i] * ys[j] != 1;
    if (ok) return ys;
  }
}

}  // namespace

TEST_SUITE("latticepf") {
  TEST_CASE("Boltzmann weights") {
    const Rational t = make_rational(1, 4), r = make_rational(2, 3);
    const auto w = BoltzmannWeights::at_ratio(r, t);
    CHECK(w.a == (1 - t * r) / (1 - r));
    CHECK(w.b_plus == 1);
    CHECK(w.b_minus == t);
    CHECK(w.c_plus == (1 - t) / (1 - r));
    CHECK(w.c_minus == (1 - t) * r / (1 - r));
    const auto zero = BoltzmannWeights::at_ratio(0, t);
    CHECK(zero.a == 1);
    CHECK(zero.c_minus == 0);
    CHECK_THROWS_AS(BoltzmannWeights::at_ratio(1, t), DegenerateSample);
  }

  TEST_CASE("domain names round-trip") {
    for (auto k : {DomainKind::Square, DomainKind::PartialSquare, DomainKind::UTurn, DomainKind::PartialUTurn,
                   DomainKind::OffDiagonal, DomainKind::OffDiagonalOdd})
      CHECK(parse_domain_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_domain_kind("hexagon"), InvalidInput);
  }

  TEST_CASE("Izergin determinant") {
    const Rational t = make_rational(1, 11);
    const Rational x = make_rational(2, 5), y = make_rational(-1, 3);
    CHECK(z_asm_closed(rs({x}), rs({y}), t) == (1 - t) / (1 - x * y));

    const auto xs = rs({make_rational(1, 2), make_rational(1, 3)});
    const auto ys = rs({make_rational(1, 5), make_rational(1, 7)});
    const auto sum = enumerate_lattice(DomainKind::Square, xs, ys, t);
    CHECK(sum.count == 2);
    CHECK(sum.weight_sum == z_asm_closed(xs, ys, t));

    Rational cauchy = 1;
    for (const auto& a : xs)
      for (const auto& b : ys) cauchy /= 1 - a * b;
    CHECK(z_asm_closed(xs, ys, 0) == cauchy);

    CHECK_THROWS_AS(z_asm_closed(rs({1, 1}), ys, t), DegenerateSample);
  }

  TEST_CASE("ASM enumeration against a matrix oracle") {
    const std::array<std::uint64_t, 5> counts{1, 2, 7, 42, 429};
    for (int n = 1; n <= 5; ++n) {
      std::vector<Rational> x, y;
      for (int i = 0; i < n; ++i) {
        x.push_back(make_rational(1, i + 2));
        y.push_back(make_rational(-1, i + 3));
      }
      std::set<Grid> seen;
      Rational total = 0;
      const auto sum = enumerate_lattice(DomainKind::Square, x, y, make_rational(1, 7), [&](const LatticeConfig& c) {
        seen.insert(asm_matrix(c));
        total += c.weight;
      });
      CHECK(sum.count == counts[static_cast<std::size_t>(n - 1)]);
      CHECK(seen.size() == sum.count);
      CHECK(total == sum.weight_sum);
      for (const auto& a : seen) CHECK(is_asm(a));
      if (n <= 4) {
        Grid g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        std::set<Grid> oracle;
        asm_oracle(g, 0, oracle);
        CHECK(oracle == seen);
      }
    }
  }

  TEST_CASE("partial domain wall") {
    Sampler s(4);
    const Rational t = make_rational(-2, 9);
    auto x = s.distinct(2);
    auto y = s.distinct(2);
    CHECK(z_asm_partial_closed(x, y, t) == z_asm_closed(x, y, t));
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= std::min(n, 2); ++m) {
        const auto [lhs, rhs] = generic([&]() -> Pair {
          auto xm = s.distinct(m), yn = s.distinct(n);
          return {enumerate_lattice(DomainKind::PartialSquare, xm, yn, t).weight_sum, z_asm_partial_closed(xm, yn, t)};
        });
        CHECK(lhs == rhs);
      }
    // One row at x = 0: Z_ASM / (1 - t) is the partial function on the others.
    for (int n = 2; n <= 3; ++n) {
      const auto [lhs, rhs] = generic([&]() -> Pair {
        auto xm = s.distinct(n - 1), yn = s.distinct(n);
        auto full = xm;
        full.push_back(0);
        return {z_asm_closed(full, yn, t) / (1 - t), z_asm_partial_closed(xm, yn, t)};
      });
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("zero rapidity rows never carry c- vertices") {
    const auto x = rs({make_rational(1, 2), 0});
    const auto y = rs({make_rational(1, 3), make_rational(2, 5)});
    enumerate_lattice(DomainKind::Square, x, y, make_rational(1, 3), [&](const LatticeConfig& c) {
      for (auto v : c.rows[1])
        if (v == VertexType::CMinus) CHECK(c.weight == 0);
    });
  }

  TEST_CASE("Tsuchiya determinant") {
    const Rational t = make_rational(3, 8);
    const Rational x = make_rational(1, 3), y = make_rational(-2, 5);
    CHECK(z_uasm_closed(rs({x}), rs({y}), t) == (1 - t) / ((1 - x * y) * (1 - x / y)));
    CHECK(enumerate_lattice(DomainKind::UTurn, rs({x}), rs({y}), t).weight_sum ==
          (1 - t) / ((1 - x * y) * (1 - x / y)));

    Sampler s(9);
    for (int n = 2; n <= 3; ++n) {
      const auto [lhs, rhs] = generic([&]() -> Pair {
        auto xs = s.distinct(n);
        auto ys = y_point(s, n);
        return {enumerate_lattice(DomainKind::UTurn, xs, ys, t).weight_sum, z_uasm_closed(xs, ys, t)};
      });
      CHECK(lhs == rhs);
    }
    generic([&] {
      auto xs = s.distinct(2);
      auto ys = y_point(s, 2);
      const Rational base = z_uasm_closed(xs, ys, t);
      CHECK(z_uasm_closed(rs({xs[1], xs[0]}), ys, t) == base);
      CHECK(z_uasm_closed(xs, rs({ys[1], ys[0]}), t) == base);
    });
  }

  TEST_CASE("partial reflecting domain") {
    Sampler s(10);
    const Rational t = make_rational(4, 7);
    const auto [full, partial] = generic([&]() -> Pair {
      auto x = s.distinct(2);
      auto y = y_point(s, 2);
      return {z_uasm_closed(x, y, t), z_uasm_partial_closed(x, y, t)};
    });
    CHECK(full == partial);
    for (int n = 1; n <= 2; ++n) {
      const auto [lhs, rhs] = generic([&]() -> Pair {
        auto x1 = s.distinct(1);
        auto yn = y_point(s, n);
        return {enumerate_lattice(DomainKind::PartialUTurn, x1, yn, t).weight_sum, z_uasm_partial_closed(x1, yn, t)};
      });
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("Kuperberg Pfaffian") {
    const Rational t = make_rational(1, 6);
    const auto two = rs({make_rational(1, 2), make_rational(-3, 4)});
    CHECK(z_osasm_closed(two, t) == (1 - t) / (1 - two[0] * two[1]));
    CHECK_THROWS_AS(z_osasm_closed(rs({make_rational(1, 2)}), t), InvalidInput);

    Sampler s(12);
    for (int n = 2; n <= 6; n += 2) {
      const auto [lhs, rhs] = generic([&]() -> Pair {
        auto x = s.distinct(n);
        return {enumerate_lattice(DomainKind::OffDiagonal, x, {}, t).weight_sum, z_osasm_closed(x, t)};
      });
      CHECK(lhs == rhs);
    }
    generic([&] {
      auto x = s.distinct(4);
      const Rational base = z_osasm_closed(x, t);
      CHECK(z_osasm_closed(rs({x[2], x[0], x[3], x[1]}), t) == base);
      CHECK(z_osasm_closed(rs({x[1], x[0], x[2], x[3]}), t) == base);
    });
  }

  TEST_CASE("odd off-diagonal domain") {
    const Rational t = make_rational(2, 11);
    CHECK(z_osasm_odd_closed(rs({make_rational(3, 5)}), t) == 1);
    CHECK(enumerate_lattice(DomainKind::OffDiagonalOdd, rs({make_rational(3, 5)}), {}, t).weight_sum == 1);
    Sampler s(13);
    for (int n = 1; n <= 5; n += 2) {
      const auto [enumerated, odd, padded] = generic([&] {
        auto x = s.distinct(n);
        auto pad = x;
        pad.push_back(0);
        return std::tuple{enumerate_lattice(DomainKind::OffDiagonalOdd, x, {}, t).weight_sum, z_osasm_odd_closed(x, t),
                          Rational(z_osasm_closed(pad, t) / (1 - t))};
      });
      CHECK(enumerated == odd);
      CHECK(padded == odd);
    }
  }

  TEST_CASE("size checks") {
    CHECK_THROWS_AS(enumerate_lattice(DomainKind::Square, rs({1}), rs({2, 3}), 0), InvalidInput);
    CHECK_THROWS_AS(enumerate_lattice(DomainKind::OffDiagonal, rs({2, 3, 5}), {}, 0), InvalidInput);
  }
}
