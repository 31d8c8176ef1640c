#include "vertexid/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vertexid/latticepf.hpp"
#include "vertexid/macdiff.hpp"
#include "vertexid/matrix.hpp"
#include "vertexid/partitions.hpp"
#include "vertexid/planepart.hpp"
#include "vertexid/sampling.hpp"
#include "vertexid/symfunc.hpp"
#include "vertexid/trunc_series.hpp"

namespace vertexid {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::RationalPoint:
      return "rationalPoint";
    case Mode::SeriesInX:
      return "seriesInX";
    case Mode::QSeries:
      return "qSeries";
  }
  return "?";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::SkippedDegenerate:
      return "skipped-degenerate";
  }
  return "?";
}

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::Classical:
      return "classical";
    case Provenance::Theorem:
      return "theorem";
    case Provenance::Conjecture:
      return "conjecture";
  }
  return "?";
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Sizes {
  int n;
  int m;
  int degree;
};

// Canonical text of both sides of one sample, plus the first difference.
struct Side {
  std::string lhs;
  std::string rhs;
  std::optional<std::string> mismatch;
};

Side compare(const Rational& lhs, const Rational& rhs) {
  Side s{to_string(lhs), to_string(rhs), std::nullopt};
  if (lhs != rhs) s.mismatch = "lhs=" + s.lhs + " rhs=" + s.rhs;
  return s;
}

Side compare(const TruncSeries& lhs, const TruncSeries& rhs) {
  Side s{lhs.to_string(), rhs.to_string(), std::nullopt};
  if (lhs == rhs) return s;
  std::map<Monomial, std::pair<Rational, Rational>> all;
  for (const auto& [mono, c] : lhs.terms()) all[mono].first = c;
  for (const auto& [mono, c] : rhs.terms()) all[mono].second = c;
  for (const auto& [mono, pair] : all) {
    if (pair.first == pair.second) continue;
    std::string name = TruncSeries::monomial(lhs.variables(), lhs.cutoff(), mono).to_string();
    s.mismatch = "coefficient of " + name + ": lhs=" + to_string(pair.first) + " rhs=" + to_string(pair.second);
    break;
  }
  return s;
}

// Concatenates per-item comparisons (used by identities that check a family
// of values at one sample).
struct SideList {
  Side side;
  void add(const std::string& label, const Rational& lhs, const Rational& rhs) {
    side.lhs += label + "=" + to_string(lhs) + ";";
    side.rhs += label + "=" + to_string(rhs) + ";";
    if (!side.mismatch && lhs != rhs) side.mismatch = label + ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
  }
};

Rational nonzero(const Rational& v, const char* what) {
  if (v == 0) throw DegenerateSample(what);
  return v;
}

class Draw {
 public:
  Draw(std::uint64_t seed, std::optional<Rational> fixed_t) : sampler_(seed), fixed_t_(std::move(fixed_t)) {}

  Rational value() { return sampler_.next(); }
  std::vector<Rational> distinct(int count) { return sampler_.distinct(count); }

  Rational t() {
    if (fixed_t_) return *fixed_t_;
    for (;;) {
      Rational v = sampler_.next();
      if (v != 1 && v != -1) return v;
    }
  }

  // Distinct, away from +-1 and with no pair y_i y_j = 1, so that y and its
  // reciprocal never collide.
  std::vector<Rational> y(int count) {
    for (;;) {
      auto ys = sampler_.distinct(count, {Rational(1), Rational(-1)});
      bool ok = true;
      for (int i = 0; i < count && ok; ++i)
        for (int j = i + 1; j < count && ok; ++j) ok = ys[i] * ys[j] != 1;
      if (ok) return ys;
    }
  }

 private:
  Sampler sampler_;
  std::optional<Rational> fixed_t_;
};

// ---------------------------------------------------------------------------
// Series helpers over the formal variables X_0..X_{k-1}.

struct Ring {
  int k;
  int cutoff;

  TruncSeries one() const { return TruncSeries::constant(k, cutoff, 1); }
  TruncSeries zero() const { return TruncSeries(k, cutoff); }
  TruncSeries constant(const Rational& c) const { return TruncSeries::constant(k, cutoff, c); }
  TruncSeries x(int i) const { return TruncSeries::variable(k, cutoff, i); }
  // 1/(1 - c X_i)
  TruncSeries geom(int i, const Rational& c) const { return TruncSeries::geometric(k, cutoff, i, c); }
  // 1/(1 - c X_i X_j), or 1/(1 - c X_i^2) for i = j
  TruncSeries geom2(int i, int j, const Rational& c) const {
    return TruncSeries::geometric(k, cutoff, pair(i, j), c);
  }
  // 1 - c X_i
  TruncSeries one_minus(int i, const Rational& c) const {
    auto s = one();
    s.add_term(pair(i, -1), -c);
    return s;
  }
  // 1 - c X_i X_j, or 1 - c X_i^2
  TruncSeries one_minus2(int i, int j, const Rational& c) const {
    auto s = one();
    s.add_term(pair(i, j), -c);
    return s;
  }
  TruncSeries vandermonde(int count) const { return series_vandermonde(k, cutoff, count); }
  // prod_{i < count} X_i^e
  TruncSeries power_product(int count, int e) const {
    Monomial mono;
    for (int i = 0; i < count; ++i) mono.set(i, e);
    return TruncSeries::monomial(k, cutoff, mono);
  }
  // Same terms, in this ring.
  TruncSeries embed(const TruncSeries& s) const {
    TruncSeries out(k, cutoff);
    for (const auto& [mono, c] : s.terms())
      if (mono.degree() <= cutoff) out.add_term(mono, c);
    return out;
  }

  static Monomial pair(int i, int j) {
    Monomial mono;
    mono.set(i, 1);
    if (j >= 0) mono.set(j, mono[j] + 1);
    return mono;
  }
};

int pairs(int n) { return n * (n - 1) / 2; }

Rational y_vandermonde(const std::vector<Rational>& y) { return nonzero(vandermonde(y), "coincident y values"); }

// prod_{i<j} (1 - ybar_i ybar_j)
Rational ybar_pairs(const std::vector<Rational>& y) {
  Rational d = 1;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) d *= 1 - 1 / (y[i] * y[j]);
  return nonzero(d, "y_i y_j = 1");
}

Rational refined_weight(const Partition& lambda, int n, const Rational& t) {
  Rational w = 1;
  for (int i = 1; i <= n; ++i) w *= 1 - pow(t, lambda.part(i - 1) - i + n + 1);
  return w;
}

// prod over even i <= n of (1 - t^{lambda_i - i + n + 1})
Rational refined_even_weight(const Partition& lambda, int n, const Rational& t) {
  Rational w = 1;
  for (int i = 2; i <= n; i += 2) w *= 1 - pow(t, lambda.part(i - 1) - i + n + 1);
  return w;
}

bool is_even(const Partition& lambda) {
  return std::ranges::all_of(lambda.parts(), [](int p) { return p % 2 == 0; });
}

// Cauchy-type kernels at sampled y.
TruncSeries cauchy_kernel(const Ring& r, int m, const std::vector<Rational>& y, const Rational& t, bool hl) {
  auto out = r.one();
  for (int i = 0; i < m; ++i)
    for (const auto& yj : y) {
      out *= r.geom(i, yj);
      if (hl) out *= r.one_minus(i, t * yj);
    }
  return out;
}

TruncSeries symplectic_kernel(const Ring& r, int m, const std::vector<Rational>& y) {
  auto out = r.one();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out *= r.one_minus2(i, j, 1);
    for (const auto& yj : y) out *= r.geom(i, yj) * r.geom(i, 1 / yj);
  }
  return out;
}

enum class LittlewoodTail { Linear, Square, None };

TruncSeries littlewood_kernel(const Ring& r, int n, const Rational& t, bool hl, LittlewoodTail tail) {
  auto out = r.one();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out *= r.geom2(i, j, 1);
      if (hl) out *= r.one_minus2(i, j, t);
    }
    if (tail == LittlewoodTail::Linear) out *= r.geom(i, 1);
    if (tail == LittlewoodTail::Square) out *= r.geom2(i, i, 1);
  }
  return out;
}

// (1-t)/((1 - X_i c)(1 - t X_i c))
TruncSeries izergin_series(const Ring& r, int i, const Rational& c, const Rational& t) {
  return (1 - t) * (r.geom(i, c) * r.geom(i, t * c));
}

// Delta(x)_n times the right-hand side of the Izergin formula, with rows
// beyond m replaced by y_j^{n-1-i} (partial domain).
TruncSeries izergin_rhs(const Ring& r, int m, const std::vector<Rational>& y, const Rational& t, bool hl_numerator) {
  const int n = static_cast<int>(y.size());
  Matrix<TruncSeries> a(n, r.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = i < m ? izergin_series(r, i, y[j], t) : r.constant(pow(y[j], n - 1 - i));
  auto out = det(a);
  if (hl_numerator)
    for (int i = 0; i < m; ++i)
      for (const auto& yj : y) out *= r.one_minus(i, t * yj);
  for (int i = 1; i <= n - m; ++i) out *= 1 - pow(t, i);
  return out * (1 / y_vandermonde(y));
}

// Delta(x) times the right-hand side of the Tsuchiya-type formula.
// schur: the Theorem 3 prefactor prod(1 - t x_i^2); otherwise the
// conjectured prefactor prod (1 - t x y)(1 - t x ybar) / prod (1 - t x_i x_j).
TruncSeries tsuchiya_rhs(const Ring& r, int m, const std::vector<Rational>& y, const Rational& t, bool schur) {
  const int n = static_cast<int>(y.size());
  Matrix<TruncSeries> u(n, r.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational ybar = 1 / y[j];
      if (i < m) {
        u(i, j) = izergin_series(r, i, y[j], t) * (r.geom(i, ybar) * r.geom(i, t * ybar));
      } else {
        const int e = n - i;
        u(i, j) = r.constant((pow(y[j], e) - pow(ybar, e)) / nonzero(y[j] - ybar, "y = +-1"));
      }
    }
  }
  auto out = det(u);
  if (schur) {
    for (int i = 0; i < m; ++i) out *= r.one_minus2(i, i, t);
  } else {
    for (int i = 0; i < m; ++i) {
      for (const auto& yj : y) out *= r.one_minus(i, t * yj) * r.one_minus(i, t / yj);
      for (int j = i + 1; j < m; ++j) out *= r.geom2(i, j, t);
    }
    for (int i = 1; i <= n - m; ++i) out *= 1 - pow(t, i);
  }
  return out * (1 / (y_vandermonde(y) * ybar_pairs(y)));
}

// Delta(x) times the Pfaffian right-hand side of the refined Littlewood
// identities. odd: n is odd and the Pfaffian is bordered by x_i (the
// clearing factor then includes prod x_i).
TruncSeries kuperberg_rhs(const Ring& r, int n, const Rational& t, bool hl_numerator) {
  const bool odd = n % 2 == 1;
  const int order = odd ? n + 1 : n;
  Matrix<TruncSeries> a(order, r.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = (r.x(i) - r.x(j)) * (r.geom2(i, j, 1) * r.geom2(i, j, t));
      if (!odd) a(i, j) *= 1 - t;
      a(j, i) = -a(i, j);
    }
    if (odd) {
      a(i, n) = r.x(i);
      a(n, i) = -r.x(i);
    }
  }
  auto out = pfaffian(a);
  if (hl_numerator)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out *= r.one_minus2(i, j, t);
  if (odd) out *= pow(1 - t, order / 2);
  return out;
}

// ---------------------------------------------------------------------------
// Left-hand sides: sums over partitions of coefficient * f_lambda(X) * g.

using Coefficient = std::function<Rational(const Partition&)>;

TruncSeries partition_sum(const Ring& r, int vars, int degree, const Rational& t,
                          const std::function<bool(const Partition&)>& keep, const Coefficient& coeff) {
  HLExpander expander(r.k, t, r.cutoff);
  auto out = r.zero();
  for (const auto& lambda : enumerate_partitions(degree, vars)) {
    if (keep && !keep(lambda)) continue;
    Rational c = coeff(lambda);
    if (c != 0) out.add_scaled(expander.expand(lambda, vars), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities.

using Runner = std::function<Side(const Sizes&, Draw&)>;

struct Entry {
  IdentityInfo info;
  Runner run;
  int max_n;
  bool sampled = true;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

Side run_cauchy_det(const Sizes& s, Draw& d) {
  auto x = d.distinct(s.n);
  auto y = d.distinct(s.n);
  Matrix<Rational> a(s.n, Rational(0));
  Rational denominator = 1;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      Rational e = nonzero(1 - x[i] * y[j], "x_i y_j = 1");
      a(i, j) = 1 / e;
      denominator *= e;
    }
  return compare(det(a), vandermonde(x) * vandermonde(y) / denominator);
}

Side run_further_cauchy_det(const Sizes& s, Draw& d) {
  auto x = d.distinct(s.n);
  auto y = d.y(s.n);
  Matrix<Rational> a(s.n, Rational(0));
  Rational denominator = 1;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      Rational e = nonzero((1 - x[i] * y[j]) * (1 - x[i] / y[j]), "pole of the entry");
      a(i, j) = 1 / e;
      denominator *= e;
    }
  Rational numerator = vandermonde(x) * vandermonde(y);
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) numerator *= (1 - x[i] * x[j]) * (1 - 1 / (y[i] * y[j]));
  return compare(det(a), numerator / denominator);
}

Side run_stembridge(const Sizes& s, Draw& d) {
  auto x = d.distinct(s.n);
  Matrix<Rational> a(s.n, Rational(0));
  Rational product = 1;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      a(i, j) = (x[i] - x[j]) / nonzero(1 - x[i] * x[j], "x_i x_j = 1");
      a(j, i) = -a(i, j);
      product *= a(i, j);
    }
  return compare(pfaffian(a), product);
}

// sum over m-subsets S of Pf[A_S] det[T_S] against Pf[T A T^t].
Side cauchy_binet_sides(const Matrix<Rational>& a, const std::vector<std::vector<Rational>>& tm, int m, int big) {
  Rational lhs = 0;
  for (std::uint32_t mask = 0; mask < (1u << big); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> cols;
    for (int k = 0; k < big; ++k)
      if (mask >> k & 1) cols.push_back(k);
    Matrix<Rational> as(m, Rational(0)), ts(m, Rational(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        as(i, j) = a(cols[i], cols[j]);
        ts(i, j) = tm[i][cols[j]];
      }
    lhs += pfaffian(as) * det(ts);
  }
  Matrix<Rational> b(m, Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational v = 0;
      for (int k = 0; k < big; ++k)
        for (int l = k + 1; l < big; ++l) v += a(k, l) * (tm[i][k] * tm[j][l] - tm[i][l] * tm[j][k]);
      b(i, j) = v;
    }
  return compare(lhs, pfaffian(b));
}

Matrix<Rational> random_antisymmetric(int order, Draw& d) {
  Matrix<Rational> a(order, Rational(0));
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) {
      a(i, j) = d.value();
      a(j, i) = -a(i, j);
    }
  return a;
}

void check_cauchy_binet_sizes(int m, int big) {
  require(m >= 2 && m % 2 == 0, "Cauchy-Binet analogue needs an even m >= 2");
  require(m <= big && big <= 8, "Cauchy-Binet analogue needs m <= M <= 8");
}

Side run_cb1(const Sizes& s, Draw& d) {
  check_cauchy_binet_sizes(s.m, s.n);
  auto a = random_antisymmetric(s.n, d);
  std::vector<std::vector<Rational>> tm(static_cast<std::size_t>(s.m));
  for (auto& row : tm)
    for (int k = 0; k < s.n; ++k) row.push_back(d.value());
  return cauchy_binet_sides(a, tm, s.m, s.n);
}

Side run_cb2(const Sizes& s, Draw& d) {
  check_cauchy_binet_sizes(s.m, s.n);
  auto a = random_antisymmetric(s.n, d);
  auto x = d.distinct(s.m);
  std::vector<std::vector<Rational>> tm(static_cast<std::size_t>(s.m));
  for (int i = 0; i < s.m; ++i)
    for (int k = 0; k < s.n; ++k) tm[i].push_back(pow(x[i], k));
  return cauchy_binet_sides(a, tm, s.m, s.n);
}

Side run_lattice(DomainKind kind, const Sizes& s, Draw& d) {
  Rational t = d.t();
  std::vector<Rational> x, y;
  Rational closed;
  switch (kind) {
    case DomainKind::Square:
      x = d.distinct(s.n);
      y = d.distinct(s.n);
      closed = z_asm_closed(x, y, t);
      break;
    case DomainKind::UTurn:
      x = d.distinct(s.n);
      y = d.y(s.n);
      closed = z_uasm_closed(x, y, t);
      break;
    default:
      x = d.distinct(s.n);
      closed = z_osasm_closed(x, t);
      break;
  }
  return compare(enumerate_lattice(kind, x, y, t).weight_sum, closed);
}

Side run_mac_eigen(const Sizes& s, Draw& d) {
  Rational t = d.t();
  Rational z = d.value();
  auto x = d.distinct(s.n);
  SideList out;
  for (const auto& lambda : enumerate_partitions(s.degree, s.n)) {
    for (const Rational& q : {t, Rational(0)}) {
      Evaluator f;
      if (q == 0)
        f = [&](std::span<const Rational> p) { return hl_branching_eval(lambda, p, t); };
      else
        f = [&](std::span<const Rational> p) { return schur_eval(lambda, p); };
      out.add(lambda.to_string() + (q == 0 ? "@q=0" : "@q=t"), apply_Dn(f, z, q, t, x),
              macdonald_eigenvalue(lambda, s.n, z, q, t) * f(x));
    }
  }
  return out.side;
}

Side run_ktilde_symplectic(const Sizes& s, Draw& d) {
  auto y = d.y(s.n);
  std::vector<Rational> z;
  for (const auto& v : y) {
    z.push_back(v);
    z.push_back(1 / v);
  }
  const std::array<Rational, 4> zero{0, 0, 0, 0};
  auto coeffs = ktilde_coeffs(z, 0, zero, s.n, s.degree);
  SideList out;
  for (const auto& lambda : enumerate_partitions(s.degree, s.n)) out.add(lambda.to_string(), coeffs.at(lambda), sp_eval(lambda, y));
  return out.side;
}

// Cauchy identities between two families; x formal, y sampled.
Side run_s_cauchy(const Sizes& s, Draw& d) {
  auto y = d.distinct(s.n);
  Ring r{s.m, s.degree};
  auto lhs = partition_sum(r, std::min(s.m, s.n), s.degree, 0, {},
                           [&](const Partition& l) -> Rational { return schur_eval(l, y); });
  return compare(lhs, cauchy_kernel(r, s.m, y, 0, false));
}

Side run_hl_cauchy(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.distinct(s.n);
  Ring r{s.m, s.degree};
  auto lhs = partition_sum(r, std::min(s.m, s.n), s.degree, t, {},
                           [&](const Partition& l) -> Rational { return b_coeff(l, t, 0) * hl_branching_eval(l, y, t); });
  return compare(lhs, cauchy_kernel(r, s.m, y, t, true));
}

Side run_symp_cauchy(const Sizes& s, Draw& d) {
  require(s.m <= s.n, "symplectic Cauchy identity needs m <= n");
  auto y = d.y(s.n);
  Ring r{s.m, s.degree};
  auto lhs = partition_sum(r, s.m, s.degree, 0, {}, [&](const Partition& l) -> Rational { return sp_eval(l, y); });
  return compare(lhs, symplectic_kernel(r, s.m, y));
}

Side run_littlewood(const Sizes& s, Draw& d, bool hl, LittlewoodTail tail) {
  Rational t = hl ? d.t() : Rational(0);
  Ring r{s.n, s.degree};
  std::function<bool(const Partition&)> keep;
  if (tail == LittlewoodTail::Square) keep = is_even;
  if (tail == LittlewoodTail::None) keep = has_even_columns;
  Coefficient coeff = [](const Partition&) { return Rational(1); };
  if (hl && tail == LittlewoodTail::None) coeff = [&](const Partition& l) -> Rational { return even_column_coeff(l, t, 0); };
  auto lhs = partition_sum(r, s.n, s.degree, t, keep, coeff);
  return compare(lhs, littlewood_kernel(r, s.n, t, hl, tail));
}

Side run_thm1(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.distinct(s.n);
  Ring r{s.n, s.degree + pairs(s.n)};
  auto sum = partition_sum(r, s.n, s.degree, 0, {},
                           [&](const Partition& l) -> Rational { return refined_weight(l, s.n, t) * schur_eval(l, y); });
  return compare(sum * r.vandermonde(s.n), izergin_rhs(r, s.n, y, t, false));
}

Side run_thm2(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.distinct(s.n);
  Ring r{s.n, s.degree + pairs(s.n)};
  auto sum = partition_sum(r, s.n, s.degree, t, {},
                           [&](const Partition& l) -> Rational { return b_coeff(l, t, s.n) * hl_branching_eval(l, y, t); });
  return compare(sum * r.vandermonde(s.n), izergin_rhs(r, s.n, y, t, true));
}

Side run_knw_pdwpf(const Sizes& s, Draw& d) {
  require(s.m <= s.n, "partial identity needs m <= n");
  Rational t = d.t();
  auto y = d.distinct(s.n);
  Ring r{s.m, s.degree + pairs(s.m) + s.m * (s.n - s.m)};
  auto sum = partition_sum(r, s.m, s.degree, t, {},
                           [&](const Partition& l) -> Rational { return b_coeff(l, t, s.n) * hl_branching_eval(l, y, t); });
  auto lhs = sum * r.vandermonde(s.m) * r.power_product(s.m, s.n - s.m);
  return compare(lhs, izergin_rhs(r, s.m, y, t, true));
}

Side run_thm3(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.y(s.n);
  Ring r{s.n, s.degree + pairs(s.n)};
  auto sum = partition_sum(r, s.n, s.degree, 0, {},
                           [&](const Partition& l) -> Rational { return refined_weight(l, s.n, t) * sp_eval(l, y); });
  return compare(sum * r.vandermonde(s.n), tsuchiya_rhs(r, s.n, y, t, true));
}

Side run_conj1(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.y(s.n);
  Ring r{s.n, s.degree + pairs(s.n)};
  auto sum = partition_sum(r, s.n, s.degree, t, {},
                           [&](const Partition& l) -> Rational { return b_coeff(l, t, s.n) * bchl_eval(l, y, t); });
  return compare(sum * r.vandermonde(s.n), tsuchiya_rhs(r, s.n, y, t, false));
}

Side run_conj1prime(const Sizes& s, Draw& d) {
  require(s.m <= s.n, "partial identity needs m <= n");
  Rational t = d.t();
  auto y = d.y(s.n);
  Ring r{s.m, s.degree + pairs(s.m) + s.m * (s.n - s.m)};
  auto sum = partition_sum(r, s.m, s.degree, t, {},
                           [&](const Partition& l) -> Rational { return b_coeff(l, t, s.n) * bchl_eval(l, y, t); });
  auto lhs = sum * r.vandermonde(s.m) * r.power_product(s.m, s.n - s.m);
  return compare(lhs, tsuchiya_rhs(r, s.m, y, t, false));
}

Side run_thm4(const Sizes& s, Draw& d) {
  require(s.n % 2 == 0, "thm4 needs an even number of variables");
  Rational t = d.t();
  Ring r{s.n, s.degree + pairs(s.n)};
  auto sum = partition_sum(r, s.n, s.degree, 0, has_even_columns,
                           [&](const Partition& l) -> Rational { return refined_even_weight(l, s.n, t); });
  return compare(sum * r.vandermonde(s.n), kuperberg_rhs(r, s.n, t, false));
}

Side run_conj2(const Sizes& s, Draw& d) {
  require(s.n % 2 == 0, "conj2 needs an even number of variables");
  Rational t = d.t();
  Ring r{s.n, s.degree + pairs(s.n)};
  auto sum = partition_sum(r, s.n, s.degree, t, has_even_columns,
                           [&](const Partition& l) -> Rational { return even_column_coeff(l, t, s.n); });
  return compare(sum * r.vandermonde(s.n), kuperberg_rhs(r, s.n, t, true));
}

Side run_conj2prime(const Sizes& s, Draw& d) {
  require(s.n % 2 == 1, "conj2prime needs an odd number of variables");
  Rational t = d.t();
  Ring r{s.n, s.degree + pairs(s.n) + s.n};
  auto sum = partition_sum(r, s.n, s.degree, t, has_even_columns,
                           [&](const Partition& l) -> Rational { return even_column_coeff(l, t, s.n + 1); });
  return compare(sum * r.vandermonde(s.n) * r.power_product(s.n, 1), kuperberg_rhs(r, s.n, t, true));
}

// Plane-partition generating series.
GsParams gs_params(int m, int n, int cutoff, std::vector<Rational> y, const Rational& t) {
  GsParams p;
  p.m = m;
  p.n = n;
  p.cutoff = cutoff;
  p.y = std::move(y);
  p.t = t;
  return p;
}

Side run_s_pp(const Sizes& s, Draw& d, bool hl) {
  Rational t = hl ? d.t() : Rational(0);
  auto y = d.distinct(s.n);
  Ring r{s.m, s.degree};
  auto lhs = gs_lhs(hl ? "hl-pp-gs" : "s-pp-gs", gs_params(s.m, s.n, s.degree, y, t));
  return compare(lhs, cauchy_kernel(r, s.m, y, t, hl));
}

Side run_pp_asm(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.distinct(s.n);
  Ring r{s.n, s.degree + pairs(s.n)};
  auto lhs = r.embed(gs_lhs("pp-asm-gs", gs_params(s.n, s.n, s.degree, y, t))) * r.vandermonde(s.n);
  return compare(lhs, izergin_rhs(r, s.n, y, t, true));
}

Side run_symp_cauch_pp(const Sizes& s, Draw& d) {
  require(s.m <= s.n, "symplectic plane partitions need m <= n");
  auto y = d.y(s.n);
  Ring r{s.m, s.degree};
  auto lhs = gs_lhs("symp-cauch-pp", gs_params(s.m, s.n, s.degree, y, 0));
  return compare(lhs, symplectic_kernel(r, s.m, y));
}

Side run_symp_pp_uasm(const Sizes& s, Draw& d) {
  Rational t = d.t();
  auto y = d.y(s.n);
  Ring r{s.n, s.degree + pairs(s.n)};
  auto lhs = r.embed(gs_lhs("symp-pp-uasm", gs_params(s.n, s.n, s.degree, y, t))) * r.vandermonde(s.n);
  return compare(lhs, tsuchiya_rhs(r, s.n, y, t, true));
}

Side run_little3_pp(const Sizes& s, Draw& d, bool hl) {
  Rational t = hl ? d.t() : Rational(0);
  Ring r{s.n, s.degree};
  auto lhs = gs_lhs(hl ? "hl-little3-pp-gs" : "s-little3-pp-gs", gs_params(0, s.n, s.degree, {}, t));
  return compare(lhs, littlewood_kernel(r, s.n, t, hl, LittlewoodTail::None));
}

Side run_sym_pp_osasm(const Sizes& s, Draw& d) {
  require(s.n % 2 == 0, "sym-pp-osasm needs an even size");
  Rational t = d.t();
  Ring r{s.n, s.degree + pairs(s.n)};
  auto lhs = r.embed(gs_lhs("sym-pp-osasm", gs_params(0, s.n, s.degree, {}, t))) * r.vandermonde(s.n);
  return compare(lhs, kuperberg_rhs(r, s.n, t, true));
}

// q-series.
Side run_vol_pp(const Sizes& s, Draw&) {
  Ring r{1, s.degree};
  auto rhs = r.one();
  for (int i = 1; i <= s.m; ++i)
    for (int j = 1; j <= s.n; ++j) {
      Monomial q;
      q.set(0, i + j - 1);
      rhs *= TruncSeries::geometric(1, s.degree, q, 1);
    }
  return compare(gs_lhs("vol-pp", gs_params(s.m, s.n, s.degree, {}, 0)), rhs);
}

Side run_macmahon(const Sizes& s, Draw& d, bool vuletic) {
  Rational t = vuletic ? d.t() : Rational(0);
  Ring r{1, s.degree};
  auto rhs = r.one();
  for (int i = 1; i <= s.degree; ++i) {
    Monomial q;
    q.set(0, i);
    auto factor = TruncSeries::geometric(1, s.degree, q, 1);
    if (vuletic) {
      auto num = r.one();
      num.add_term(q, -t);
      factor *= num;
    }
    for (int k = 0; k < i; ++k) rhs *= factor;
  }
  auto lhs = gs_lhs(vuletic ? "vuletic-gs" : "macmahon", gs_params(0, 0, s.degree, {}, t));
  return compare(lhs, rhs);
}

Side run_symp_pp_vol(const Sizes& s, Draw&) {
  require(s.m <= s.n, "symplectic plane partitions need m <= n");
  const int order = 2 * s.degree;  // in powers of q^{1/2}
  auto p = gs_params(s.m, s.n, order, {}, 0);
  auto lhs = gs_lhs("symp-pp-vol", p);
  p.max_central = order / 2 + 1;
  auto wider = gs_lhs("symp-pp-vol", p);
  if (wider != lhs) {
    Side side = compare(lhs, wider);
    side.mismatch = "truncation not stable under a larger central-weight cutoff: " + side.mismatch.value_or("");
    return side;
  }
  Ring r{1, order};
  auto power = [](int e) {
    Monomial mono;
    mono.set(0, e);
    return mono;
  };
  auto rhs = r.one();
  for (int i = 1; i <= s.m; ++i)
    for (int j = i + 1; j <= s.m; ++j) {
      auto f = r.one();
      f.add_term(power(2 * (i + j + 1)), -1);
      rhs *= f;
    }
  for (int i = 1; i <= s.m; ++i)
    for (int k = 0; k < s.n; ++k) {
      rhs *= TruncSeries::geometric(1, order, power(2 * i), 1);
      rhs *= TruncSeries::geometric(1, order, power(2 * i + 2), 1);
    }
  return compare(lhs, rhs);
}

IdentityInfo info(std::string id, std::string eq, Mode mode, Provenance p, int n, int m, int degree,
                  std::string summary) {
  return IdentityInfo{std::move(id), std::move(eq), mode, p, n, m, degree, std::move(summary)};
}

const std::vector<Entry>& registry() {
  using M = Mode;
  using P = Provenance;
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](IdentityInfo i, Runner run, int max_n, bool sampled = true) {
      e.push_back(Entry{std::move(i), std::move(run), max_n, sampled});
    };
    add(info("cauchy-det", "cauch-det", M::RationalPoint, P::Classical, 3, 0, 0, "Cauchy determinant"),
        run_cauchy_det, 8);
    add(info("further-cauchy-det", "further-cauch-det", M::RationalPoint, P::Classical, 3, 0, 0,
             "symplectic Cauchy-type determinant"),
        run_further_cauchy_det, 8);
    add(info("stembridge-pf", "stem-pf", M::RationalPoint, P::Classical, 4, 0, 0,
             "Pfaffian of (x_i-x_j)/(1-x_i x_j); n = number of variables (even)"),
        [](const Sizes& s, Draw& d) {
          require(s.n % 2 == 0, "stembridge-pf needs an even number of variables");
          return run_stembridge(s, d);
        },
        8);
    add(info("cb-analog1", "cb-analog1", M::RationalPoint, P::Classical, 4, 2, 0,
             "Pfaffian Cauchy-Binet analogue; n = M columns, m = rows (even)"),
        run_cb1, 8);
    add(info("cb-analog2", "cb-analog2", M::RationalPoint, P::Classical, 4, 2, 0,
             "Vandermonde case T_ij = x_i^{j-1}; n = M, m even"),
        run_cb2, 8);
    add(info("izergin-lattice", "ize-det", M::RationalPoint, P::Classical, 3, 0, 0,
             "domain wall lattice sum against the Izergin determinant"),
        [](const Sizes& s, Draw& d) { return run_lattice(DomainKind::Square, s, d); }, 5);
    add(info("tsuchiya-lattice", "tsu-det", M::RationalPoint, P::Classical, 2, 0, 0,
             "reflecting lattice sum against the Tsuchiya determinant"),
        [](const Sizes& s, Draw& d) { return run_lattice(DomainKind::UTurn, s, d); }, 3);
    add(info("kuperberg-lattice", "kup-osasm", M::RationalPoint, P::Classical, 4, 0, 0,
             "off-diagonal lattice sum against the Kuperberg Pfaffian; n = number of lines (even)"),
        [](const Sizes& s, Draw& d) {
          require(s.n % 2 == 0, "kuperberg-lattice needs an even number of lines");
          return run_lattice(DomainKind::OffDiagonal, s, d);
        },
        6);
    add(info("mac-eigen", "mac-eig", M::RationalPoint, P::Classical, 3, 0, 4,
             "D_n eigenvalues on Schur (q=t) and Hall-Littlewood (q=0) polynomials, |lambda| <= degree"),
        run_mac_eigen, 4);
    add(info("ktilde-symplectic", "Ktilde-cauchy", M::RationalPoint, P::Classical, 2, 0, 4,
             "K-tilde at t = t0..t3 = 0, z = (y, 1/y) equals sp_lambda, length <= n"),
        run_ktilde_symplectic, 3);
    add(info("s-cauchy", "s-cauch", M::SeriesInX, P::Classical, 2, 2, 6, "Schur Cauchy identity"), run_s_cauchy,
        4);
    add(info("hl-cauchy", "hl-cauch2", M::SeriesInX, P::Classical, 2, 2, 6, "Hall-Littlewood Cauchy identity"),
        run_hl_cauchy, 4);
    add(info("symp-cauchy", "symp-cauch", M::SeriesInX, P::Classical, 2, 2, 6, "symplectic Cauchy identity"),
        run_symp_cauchy, 3);
    add(info("s-little1", "s-little1", M::SeriesInX, P::Classical, 3, 0, 6, "sum of all Schur polynomials"),
        [](const Sizes& s, Draw& d) { return run_littlewood(s, d, false, LittlewoodTail::Linear); }, 4);
    add(info("s-little2", "s-little2", M::SeriesInX, P::Classical, 3, 0, 6, "sum over even partitions"),
        [](const Sizes& s, Draw& d) { return run_littlewood(s, d, false, LittlewoodTail::Square); }, 4);
    add(info("s-little3", "s-little3", M::SeriesInX, P::Classical, 3, 0, 6, "sum over partitions with even columns"),
        [](const Sizes& s, Draw& d) { return run_littlewood(s, d, false, LittlewoodTail::None); }, 4);
    add(info("hl-little1", "HL-little1", M::SeriesInX, P::Classical, 3, 0, 6, "sum of all P_lambda"),
        [](const Sizes& s, Draw& d) { return run_littlewood(s, d, true, LittlewoodTail::Linear); }, 4);
    add(info("hl-little2", "HL-little2", M::SeriesInX, P::Classical, 3, 0, 6, "sum of P_lambda over even lambda"),
        [](const Sizes& s, Draw& d) { return run_littlewood(s, d, true, LittlewoodTail::Square); }, 4);
    add(info("hl-little3", "HL-little3", M::SeriesInX, P::Classical, 3, 0, 6,
             "weighted sum of P_lambda over even columns"),
        [](const Sizes& s, Draw& d) { return run_littlewood(s, d, true, LittlewoodTail::None); }, 4);
    add(info("thm1", "s-cauchy-refine", M::SeriesInX, P::Theorem, 2, 0, 6,
             "refined Schur Cauchy identity, Izergin determinant; cleared by Delta(x)"),
        run_thm1, 3);
    add(info("thm2", "knw-id", M::SeriesInX, P::Theorem, 2, 0, 6,
             "Hall-Littlewood expansion of the domain wall partition function; cleared by Delta(x)"),
        run_thm2, 3);
    add(info("knw-pdwpf", "knw-pdwpf", M::SeriesInX, P::Theorem, 2, 1, 6,
             "partial domain wall version; cleared by Delta(x)_m prod x_i^{n-m}"),
        run_knw_pdwpf, 3);
    add(info("thm3", "s-uasm", M::SeriesInX, P::Theorem, 2, 0, 6,
             "Schur times symplectic expansion of the reflecting partition function; cleared by Delta(x)"),
        run_thm3, 2);
    add(info("conj1", "uasm-conj", M::SeriesInX, P::Conjecture, 2, 0, 6,
             "P_lambda times BC_n Hall-Littlewood expansion; cleared by Delta(x)"),
        run_conj1, 2);
    add(info("conj1prime", "uasm-conj-pdwpf", M::SeriesInX, P::Conjecture, 2, 1, 5,
             "partial reflecting version; cleared by Delta(x)_m prod x_i^{n-m}"),
        run_conj1prime, 2);
    add(info("thm4", "s-refined-little", M::SeriesInX, P::Theorem, 2, 0, 6,
             "refined Schur Littlewood identity; n = number of variables (even); cleared by Delta(x)"),
        run_thm4, 4);
    add(info("conj2", "osasm-conj", M::SeriesInX, P::Conjecture, 2, 0, 6,
             "Hall-Littlewood expansion of the OSASM Pfaffian; n even; cleared by Delta(x)"),
        run_conj2, 4);
    add(info("conj2prime", "osasm-conj-pdwpf", M::SeriesInX, P::Conjecture, 1, 0, 5,
             "odd-size version; n odd; cleared by Delta(x) prod x_i"),
        run_conj2prime, 3);
    add(info("s-pp-gs", "s-pp-gs", M::SeriesInX, P::Classical, 2, 2, 6, "plane partitions in an m x n base"),
        [](const Sizes& s, Draw& d) { return run_s_pp(s, d, false); }, 3);
    add(info("hl-pp-gs", "hl-pp-gs", M::SeriesInX, P::Classical, 2, 2, 6, "path-weighted plane partitions"),
        [](const Sizes& s, Draw& d) { return run_s_pp(s, d, true); }, 3);
    add(info("pp-asm-gs", "pp-ASM-gs", M::SeriesInX, P::Theorem, 2, 0, 6,
             "plane partitions with height-0 paths against Z_ASM; cleared by Delta(x)"),
        run_pp_asm, 3);
    add(info("symp-cauch-pp", "symp-cauch-pp", M::SeriesInX, P::Classical, 2, 2, 6, "symplectic plane partitions"),
        run_symp_cauch_pp, 3);
    add(info("symp-pp-uasm", "symp-pp-UASM", M::SeriesInX, P::Theorem, 2, 0, 6,
             "central-slice weighted symplectic plane partitions; cleared by Delta(x)"),
        run_symp_pp_uasm, 2);
    add(info("s-little3-pp-gs", "s-little3-pp-gs", M::SeriesInX, P::Classical, 3, 0, 6,
             "symmetric plane partitions with paired diagonal"),
        [](const Sizes& s, Draw& d) { return run_little3_pp(s, d, false); }, 4);
    add(info("hl-little3-pp-gs", "hl-little3-pp-gs", M::SeriesInX, P::Classical, 3, 0, 6,
             "path-weighted symmetric plane partitions"),
        [](const Sizes& s, Draw& d) { return run_little3_pp(s, d, true); }, 4);
    add(info("sym-pp-osasm", "sym-pp-OSASM", M::SeriesInX, P::Conjecture, 4, 0, 6,
             "symmetric plane partitions with height-0 paths; n even; cleared by Delta(x)"),
        run_sym_pp_osasm, 4);
    add(info("vol-pp", "vol-pp", M::QSeries, P::Classical, 2, 2, 6, "volume series of an m x n base"), run_vol_pp,
        8, false);
    add(info("macmahon", "macmahon", M::QSeries, P::Classical, 0, 0, 6, "MacMahon's formula"),
        [](const Sizes& s, Draw& d) { return run_macmahon(s, d, false); }, 0, false);
    add(info("vuletic-gs", "vuletic-gs", M::QSeries, P::Classical, 0, 0, 6, "t-refined MacMahon formula"),
        [](const Sizes& s, Draw& d) { return run_macmahon(s, d, true); }, 0);
    add(info("symp-pp-vol", "symp-pp-vol", M::QSeries, P::Classical, 2, 2, 6,
             "volume series of symplectic plane partitions, in q^{1/2}"),
        run_symp_pp_vol, 3, false);
    return e;
  }();
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : registry())
    if (e.info.id == id) return e;
  throw InvalidInput("unknown identity '" + std::string(id) + "'");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kMaxDegree = 10;
constexpr int kRetries = 25;

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

const std::vector<IdentityInfo>& list_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const IdentityInfo& identity_info(std::string_view id) { return find_entry(id).info; }

Report verify_identity(std::string_view id, const VerifyParams& params) {
  const auto start = Clock::now();
  const Entry& entry = find_entry(id);
  Sizes sizes{params.n.value_or(entry.info.default_n), params.m.value_or(entry.info.default_m),
              params.degree.value_or(entry.info.default_degree)};
  require(sizes.n >= 0 && sizes.m >= 0 && sizes.degree >= 0, "sizes must be nonnegative");
  require(sizes.n <= entry.max_n || entry.max_n == 0,
          entry.info.id + ": n = " + std::to_string(sizes.n) + " exceeds the limit " + std::to_string(entry.max_n));
  require(sizes.m <= 4, entry.info.id + ": m exceeds the limit 4");
  require(sizes.degree <= kMaxDegree, entry.info.id + ": degree exceeds the limit " + std::to_string(kMaxDegree));
  require(params.samples >= 1, "samples must be positive");

  Report report;
  report.id = entry.info.id;
  report.mode = entry.info.mode;
  report.provenance = entry.info.provenance;
  report.n = sizes.n;
  report.m = sizes.m;
  report.degree = sizes.degree;
  report.samples = entry.sampled ? params.samples : 1;
  report.t = params.t;
  report.seed = params.seed;

  std::string lhs_text, rhs_text;
  bool skipped = false;
  for (int s = 0; s < report.samples && report.status != Status::Fail; ++s) {
    bool done = false;
    for (int attempt = 0; attempt < kRetries && !done; ++attempt) {
      const std::uint64_t sample_seed =
          splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(s) * 1000 + static_cast<std::uint64_t>(attempt)));
      Draw draw(sample_seed, params.t);
      try {
        Side side = entry.run(sizes, draw);
        report.sample_seeds.push_back(sample_seed);
        lhs_text += side.lhs + "\n";
        rhs_text += side.rhs + "\n";
        if (side.mismatch) {
          report.status = Status::Fail;
          report.first_mismatch = "sample " + std::to_string(s) + ": " + *side.mismatch;
        }
        done = true;
      } catch (const DegenerateSample&) {
      }
    }
    if (!done) skipped = true;
  }
  if (report.status != Status::Fail && skipped) report.status = Status::SkippedDegenerate;
  report.lhs_digest = fnv1a_hex(lhs_text);
  report.rhs_digest = fnv1a_hex(rhs_text);
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report verify_pfaffian_cauchy_binet(int m, int M, std::uint64_t seed) {
  const auto start = Clock::now();
  check_cauchy_binet_sizes(m, M);
  Report report;
  report.id = "cb-analog";
  report.mode = Mode::RationalPoint;
  report.provenance = Provenance::Classical;
  report.n = M;
  report.m = m;
  report.samples = 1;
  report.seed = seed;
  Sizes sizes{M, m, 0};
  std::string lhs_text, rhs_text;
  const Runner runners[] = {run_cb1, run_cb2};
  for (int k = 0; k < 2 && report.status == Status::Pass; ++k) {
    const std::uint64_t sample_seed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k)));
    Draw draw(sample_seed, std::nullopt);
    Side side = runners[k](sizes, draw);
    report.sample_seeds.push_back(sample_seed);
    lhs_text += side.lhs + "\n";
    rhs_text += side.rhs + "\n";
    if (side.mismatch) {
      report.status = Status::Fail;
      report.first_mismatch = std::string(k == 0 ? "general T: " : "Vandermonde T: ") + *side.mismatch;
    }
  }
  report.lhs_digest = fnv1a_hex(lhs_text);
  report.rhs_digest = fnv1a_hex(rhs_text);
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::string Report::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["schemaVersion"] = 1;
  j["id"] = id;
  nlohmann::ordered_json p;
  p["n"] = n;
  p["m"] = m;
  p["degree"] = degree;
  p["samples"] = samples;
  p["t"] = t ? nlohmann::ordered_json(vertexid::to_string(*t)) : nlohmann::ordered_json(nullptr);
  j["params"] = p;
  j["seed"] = seed;
  j["sampleSeeds"] = sample_seeds;
  j["mode"] = vertexid::to_string(mode);
  j["provenance"] = vertexid::to_string(provenance);
  j["status"] = vertexid::to_string(status);
  if (first_mismatch) j["firstMismatch"] = *first_mismatch;
  j["lhsDigest"] = lhs_digest;
  j["rhsDigest"] = rhs_digest;
  if (timing) j["elapsedMs"] = static_cast<std::int64_t>(elapsed_ms);
  return j.dump();
}

std::string Report::csv_header(bool timing) {
  std::string h = "id,mode,provenance,n,m,degree,samples,t,seed,status,lhs_digest,rhs_digest,first_mismatch";
  if (timing) h += ",elapsed_ms";
  return h;
}

std::string Report::to_csv_row(bool timing) const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::ostringstream row;
  row << id << ',' << vertexid::to_string(mode) << ',' << vertexid::to_string(provenance) << ',' << n << ',' << m
      << ',' << degree << ',' << samples << ',' << (t ? vertexid::to_string(*t) : "") << ',' << seed << ','
      << vertexid::to_string(status) << ',' << lhs_digest << ',' << rhs_digest << ','
      << (first_mismatch ? quote(*first_mismatch) : "");
  if (timing) row << ',' << static_cast<std::int64_t>(elapsed_ms);
  return row.str();
}

}  // namespace vertexid
