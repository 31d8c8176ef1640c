#include "vertexid/macdiff.hpp"

#include <bit>
#include <vector>

#include "vertexid/sampling.hpp"
#include "vertexid/symfunc.hpp"

namespace vertexid {

Rational apply_Dn(const Evaluator& f, const Rational& z, const Rational& q, const Rational& t,
                  std::span<const Rational> point) {
  const int n = static_cast<int>(point.size());
  if (n > 20) throw InvalidInput("apply_Dn: too many variables");
  if (!all_distinct(point)) throw DegenerateSample("apply_Dn: coincident coordinates");
  Rational total = 0;
  std::vector<Rational> shifted(point.begin(), point.end());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int r = std::popcount(mask);
    Rational coeff = pow(z, r) * pow(t, r * (r - 1) / 2);
    for (int i = 0; i < n && coeff != 0; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < n; ++j)
        if (!(mask >> j & 1)) coeff *= (t * point[i] - point[j]) / (point[i] - point[j]);
    }
    if (coeff == 0) continue;
    for (int i = 0; i < n; ++i) shifted[i] = (mask >> i & 1) ? q * point[i] : point[i];
    total += coeff * f(shifted);
  }
  return total;
}

Rational macdonald_eigenvalue(const Partition& lambda, int n, const Rational& z, const Rational& q, const Rational& t) {
  Rational e = 1;
  for (int i = 1; i <= n; ++i) e *= Rational(1) + z * pow(q, lambda.part(i - 1)) * pow(t, n - i);
  return e;
}

bool eigen_check(const Partition& lambda, int n, const Rational& z, const Rational& q, const Rational& t, int samples,
                 std::uint64_t seed) {
  Evaluator f;
  if (q == t)
    f = [&](std::span<const Rational> x) { return schur_eval(lambda, x); };
  else if (q == 0)
    f = [&](std::span<const Rational> x) { return hl_branching_eval(lambda, x, t); };
  else
    throw InvalidInput("eigen_check: only q = t and q = 0 are supported");
  const Rational eigenvalue = macdonald_eigenvalue(lambda, n, z, q, t);
  Sampler sampler(seed);
  for (int s = 0; s < samples; ++s) {
    auto x = sampler.distinct(n);
    if (apply_Dn(f, z, q, t, x) != eigenvalue * f(x)) return false;
  }
  return true;
}

}  // namespace vertexid
