#include "vertexid/acceptance.hpp"

#include <array>
#include <chrono>
#include <sstream>
#include <utility>

#include "vertexid/latticepf.hpp"
#include "vertexid/macdiff.hpp"
#include "vertexid/matrix.hpp"
#include "vertexid/partitions.hpp"
#include "vertexid/planepart.hpp"
#include "vertexid/sampling.hpp"
#include "vertexid/symfunc.hpp"
#include "vertexid/verify.hpp"

namespace vertexid {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kRetries = 25;

class Tally {
 public:
  explicit Tally(CriterionResult& result) : result_(result) {}

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.checks_passed) {
      result_.checks_passed = false;
      result_.failure = what;
    }
  }

  void report(const Report& r) {
    std::string what = r.id + " n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) +
                       " degree=" + std::to_string(r.degree) + ": " + to_string(r.status);
    if (r.first_mismatch) what += " (" + *r.first_mismatch + ")";
    check(r.passed(), what);
  }

  void verify(const std::string& id, int n, std::optional<int> m, int degree, int samples, std::uint64_t seed,
              std::optional<Rational> t = std::nullopt) {
    VerifyParams p;
    p.n = n;
    p.m = m;
    p.degree = degree;
    p.samples = samples;
    p.seed = seed;
    p.t = std::move(t);
    report(verify_identity(id, p));
  }

 private:
  CriterionResult& result_;
};

// Draws until `body` completes without hitting a degenerate point.
template <typename Body>
bool with_retries(Sampler& sampler, Body body) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    try {
      body(sampler);
      return true;
    } catch (const DegenerateSample&) {
    }
  }
  return false;
}

std::vector<Rational> draw_y(Sampler& s, int count) {
  for (;;) {
    auto ys = s.distinct(count, {Rational(1), Rational(-1)});
    bool ok = true;
    for (int i = 0; i < count && ok; ++i)
      for (int j = i + 1; j < count && ok; ++j) ok = ys[i] * ys[j] != 1;
    if (ok) return ys;
  }
}

Rational draw_t(Sampler& s) {
  for (;;) {
    Rational v = s.next();
    if (v != 1 && v != -1) return v;
  }
}

std::string sizes(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

// ---------------------------------------------------------------------------

void closed_forms(Tally& tally, std::uint64_t seed) {
  for (int n = 1; n <= 4; ++n) {
    tally.verify("cauchy-det", n, std::nullopt, 0, 5, seed);
    tally.verify("further-cauchy-det", n, std::nullopt, 0, 5, seed);
  }
  for (int n = 2; n <= 6; n += 2) tally.verify("stembridge-pf", n, std::nullopt, 0, 5, seed);
}

void theorems(Tally& tally, std::uint64_t seed) {
  for (int n = 1; n <= 3; ++n) {
    tally.verify("thm1", n, std::nullopt, 6, 3, seed);
    tally.verify("thm2", n, std::nullopt, 6, 3, seed);
  }
  for (int n = 1; n <= 2; ++n) tally.verify("thm3", n, std::nullopt, 6, 3, seed);
  for (int n = 2; n <= 4; n += 2) tally.verify("thm4", n, std::nullopt, 6, 3, seed);
}

void conjectures(Tally& tally, std::uint64_t seed) {
  for (int n = 1; n <= 2; ++n) tally.verify("conj1", n, std::nullopt, 6, 3, seed);
  tally.verify("conj1prime", 2, 1, 5, 3, seed);
  for (int n = 2; n <= 4; n += 2) tally.verify("conj2", n, std::nullopt, 6, 3, seed);
  for (int n = 1; n <= 3; n += 2) tally.verify("conj2prime", n, std::nullopt, 5, 3, seed);
}

void lattice_case(Tally& tally, DomainKind kind, int m, int n, Sampler& sampler) {
  const std::string label = to_string(kind) + " " + sizes(m, n);
  for (int sample = 0; sample < 3; ++sample) {
    bool agreed = false;
    const bool drawn = with_retries(sampler, [&](Sampler& s) {
      Rational t = draw_t(s);
      std::vector<Rational> x, y;
      Rational closed;
      switch (kind) {
        case DomainKind::Square:
          x = s.distinct(n);
          y = s.distinct(n);
          closed = z_asm_closed(x, y, t);
          break;
        case DomainKind::PartialSquare:
          x = s.distinct(m);
          y = s.distinct(n);
          closed = z_asm_partial_closed(x, y, t);
          break;
        case DomainKind::UTurn:
          x = s.distinct(n);
          y = draw_y(s, n);
          closed = z_uasm_closed(x, y, t);
          break;
        case DomainKind::PartialUTurn:
          x = s.distinct(m);
          y = draw_y(s, n);
          closed = z_uasm_partial_closed(x, y, t);
          break;
        case DomainKind::OffDiagonal:
          x = s.distinct(n);
          closed = z_osasm_closed(x, t);
          break;
        case DomainKind::OffDiagonalOdd:
          x = s.distinct(n);
          closed = z_osasm_odd_closed(x, t);
          break;
      }
      agreed = enumerate_lattice(kind, x, y, t).weight_sum == closed;
    });
    tally.check(drawn, label + ": no non-degenerate sample");
    tally.check(agreed, label + ": lattice sum differs from the closed form");
  }
}

void lattice(Tally& tally, std::uint64_t seed) {
  Sampler sampler(seed);
  for (int n = 1; n <= 4; ++n) lattice_case(tally, DomainKind::Square, n, n, sampler);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= std::min(n, 2); ++m) lattice_case(tally, DomainKind::PartialSquare, m, n, sampler);
  for (int n = 1; n <= 3; ++n) lattice_case(tally, DomainKind::UTurn, n, n, sampler);
  for (int n = 1; n <= 2; ++n) lattice_case(tally, DomainKind::PartialUTurn, 1, n, sampler);
  for (int n = 2; n <= 6; n += 2) lattice_case(tally, DomainKind::OffDiagonal, 0, n, sampler);
  for (int n = 1; n <= 5; n += 2) lattice_case(tally, DomainKind::OffDiagonalOdd, 0, n, sampler);

  const std::array<std::uint64_t, 5> asm_counts{1, 2, 7, 42, 429};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Rational> x, y;
    for (int i = 0; i < n; ++i) {
      x.push_back(Rational(1, 2 + i));
      y.push_back(Rational(1, 3 + 2 * i));
    }
    const auto sum = enumerate_lattice(DomainKind::Square, x, y, Rational(1, 3));
    tally.check(sum.count == asm_counts[static_cast<std::size_t>(n - 1)],
                "ASM count for n=" + std::to_string(n) + " is " + std::to_string(sum.count));
  }
}

void plane_partition_series(Tally& tally, std::uint64_t seed) {
  tally.verify("pp-asm-gs", 2, std::nullopt, 6, 3, seed);
  tally.verify("hl-pp-gs", 2, 2, 6, 3, seed);
  tally.verify("sym-pp-osasm", 4, std::nullopt, 6, 3, seed);
  tally.verify("symp-pp-uasm", 2, std::nullopt, 6, 3, seed);
  tally.verify("symp-cauch-pp", 2, 2, 6, 3, seed);
}

void macmahon(Tally& tally, std::uint64_t seed) {
  const std::array<int, 7> expected{1, 1, 3, 6, 13, 24, 48};
  std::array<int, 7> counted{};
  for (const auto& pi : enumerate_pp(6, 6, 6)) ++counted[static_cast<std::size_t>(pi.volume())];
  tally.check(counted == expected, "plane partition counts by volume differ from 1,1,3,6,13,24,48");
  const auto series = gs_lhs("macmahon", GsParams{0, 0, 6, {}, 0, std::nullopt});
  for (int k = 0; k <= 6; ++k) {
    Monomial q;
    q.set(0, k);
    tally.check(series.coefficient(q) == counted[static_cast<std::size_t>(k)],
                "MacMahon series coefficient of q^" + std::to_string(k));
  }
  tally.verify("macmahon", 0, std::nullopt, 6, 1, seed);
  tally.verify("vuletic-gs", 0, std::nullopt, 6, 3, seed, Rational(1, 3));
}

void difference_operators(Tally& tally, std::uint64_t seed) {
  Sampler sampler(seed);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : enumerate_partitions(4, n)) {
      Rational t = draw_t(sampler);
      Rational z = sampler.next();
      for (const Rational& q : {t, Rational(0)}) {
        tally.check(eigen_check(lambda, n, z, q, t, 3, sampler.next_raw()),
                    "eigen_check " + lambda.to_string() + " n=" + std::to_string(n) + (q == 0 ? " q=0" : " q=t"));
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int sample = 0; sample < 3; ++sample) {
      bool agreed = false;
      const bool drawn = with_retries(sampler, [&](Sampler& s) {
        Rational t = draw_t(s);
        auto x = s.distinct(n);
        auto y = s.distinct(n);
        Evaluator kernel = [&](std::span<const Rational> p) -> Rational {
          Rational r = 1;
          for (const auto& a : p)
            for (const auto& b : y) {
              Rational den = 1 - a * b;
              if (den == 0) throw DegenerateSample("pole of the Cauchy kernel");
              r *= (1 - t * a * b) / den;
            }
          return r;
        };
        agreed = apply_Dn(kernel, -t, 0, t, x) == z_asm_closed(x, y, t);
      });
      tally.check(drawn, "Cauchy kernel n=" + std::to_string(n) + ": no non-degenerate sample");
      tally.check(agreed, "D_n on the Cauchy kernel differs from Z_ASM at n=" + std::to_string(n));
    }
  }
}

void ktilde(Tally& tally, std::uint64_t seed) {
  Sampler sampler(seed);
  const std::array<Rational, 4> zero{0, 0, 0, 0};
  for (int n = 1; n <= 4; ++n) {
    auto y = draw_y(sampler, n);
    std::vector<Rational> z;
    for (const auto& v : y) {
      z.push_back(v);
      z.push_back(1 / v);
    }
    const auto coeffs = ktilde_coeffs(z, 0, zero, n, 4);
    for (const auto& lambda : enumerate_partitions(4, n)) {
      auto it = coeffs.find(lambda);
      const Rational value = it == coeffs.end() ? Rational(0) : it->second;
      tally.check(value == sp_eval(lambda, y), "K-tilde " + lambda.to_string() + " n=" + std::to_string(n));
    }
  }
}

void cauchy_binet(Tally& tally, std::uint64_t seed) {
  for (int m = 2; m <= 4; m += 2)
    for (int big = m; big <= 6; ++big)
      for (std::uint64_t k = 0; k < 5; ++k) tally.report(verify_pfaffian_cauchy_binet(m, big, seed + k));
}

Rational branching_weight(const PlanePartition& pi, const Rational& t) {
  Rational w = b_coeff(pi.slice(0), t, 0);
  for (int k = 0; k < pi.rows(); ++k) w *= psi_coeff(pi.slice(-k), pi.slice(-k - 1), t);
  for (int k = 0; k < pi.cols(); ++k) w *= psi_coeff(pi.slice(k), pi.slice(k + 1), t);
  return w;
}

void oracle_suites(Tally& tally, std::uint64_t seed) {
  Sampler sampler(seed);
  for (int n = 1; n <= 3; ++n) {
    for (int sample = 0; sample < 3; ++sample) {
      Rational t = draw_t(sampler);
      auto x = sampler.distinct(n);
      HLExpander expander(n, t, 5);
      for (const auto& lambda : enumerate_partitions(5, n)) {
        tally.check(expander.expand(lambda).evaluate(x) == hl_eval(lambda, x, t),
                    "hl_expand vs hl_eval " + lambda.to_string() + " n=" + std::to_string(n));
        tally.check(hl_branching_eval(lambda, x, t) == hl_eval(lambda, x, t),
                    "hl branching vs hl_eval " + lambda.to_string() + " n=" + std::to_string(n));
      }
    }
  }
  for (int n = 1; n <= 2; ++n) {
    for (int sample = 0; sample < 3; ++sample) {
      auto y = draw_y(sampler, n);
      for (const auto& lambda : enumerate_partitions(4, n))
        tally.check(sp_eval(lambda, y) == sp_tableau_eval(lambda, y),
                    "sp Weyl vs tableaux " + lambda.to_string() + " n=" + std::to_string(n));
    }
  }
  for (int sample = 0; sample < 2; ++sample) {
    Rational t = draw_t(sampler);
    for (const auto& pi : enumerate_pp(3, 3, 8))
      tally.check(path_weight(path_stats(pi).by_depth, t) == branching_weight(pi, t),
                  "path weight vs branching weight for\n" + pi.to_text());
  }
  for (int order = 2; order <= 8; order += 2) {
    for (int sample = 0; sample < 3; ++sample) {
      Matrix<Rational> a(order, 0);
      for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) {
          a(i, j) = sampler.next();
          a(j, i) = -a(i, j);
        }
      const Rational pf = pfaffian(a);
      tally.check(pf * pf == det(a), "Pf^2 = det at order " + std::to_string(order));
    }
  }
}

struct Criterion {
  const char* title;
  double limit_ms;
  void (*run)(Tally&, std::uint64_t);
};

constexpr double kFullRunLimitMs = 10 * 60 * 1000.0;

const std::array<Criterion, 10> kCriteria{{
    {"closed-form factorizations", 1000, closed_forms},
    {"refined Cauchy and Littlewood series", 5 * 60 * 1000.0, theorems},
    {"conjectured refinements", 0, conjectures},
    {"lattice sums against closed forms", 2 * 60 * 1000.0, lattice},
    {"plane-partition generating series", 0, plane_partition_series},
    {"MacMahon and Vuletic series", 0, macmahon},
    {"difference operators", 0, difference_operators},
    {"K-tilde symplectic degeneration", 0, ktilde},
    {"Pfaffian Cauchy-Binet analogue", 0, cauchy_binet},
    {"oracle-equivalence suites", kFullRunLimitMs, oracle_suites},
}};

}  // namespace

std::string CriterionResult::to_line() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << "  " << (number < 10 ? " " : "") << number << "  " << title << "  ("
      << checks << " checks, " << static_cast<long long>(elapsed_ms) << " ms";
  if (limit_ms > 0) out << ", limit " << static_cast<long long>(limit_ms) << " ms";
  out << ")";
  if (!checks_passed) out << "  first failure: " << failure;
  if (checks_passed && !within_limit()) out << "  time limit exceeded";
  return out.str();
}

CriterionResult run_criterion(int number, std::uint64_t seed) {
  if (number < 1 || number > static_cast<int>(kCriteria.size()))
    throw InvalidInput("no acceptance criterion " + std::to_string(number));
  const Criterion& c = kCriteria[static_cast<std::size_t>(number - 1)];
  CriterionResult result;
  result.number = number;
  result.title = c.title;
  result.limit_ms = c.limit_ms;
  const auto start = Clock::now();
  Tally tally(result);
  try {
    c.run(tally, seed);
  } catch (const std::exception& e) {
    tally.check(false, std::string("exception: ") + e.what());
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  const auto start = Clock::now();
  std::vector<CriterionResult> results;
  for (int k = 1; k <= static_cast<int>(kCriteria.size()); ++k) {
    CriterionResult r = run_criterion(k, seed);
    if (k == static_cast<int>(kCriteria.size())) {
      // The last criterion carries the limit on the whole run.
      r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace vertexid
