#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vertexid/partitions.hpp"
#include "vertexid/rational.hpp"
#include "vertexid/trunc_series.hpp"

namespace vertexid {

/// A sample point: x_1..x_n, y_1..y_n (reciprocals implied), t, and
/// optionally t_0..t_3.
struct PointSpec {
  std::vector<Rational> x;
  std::vector<Rational> y;
  Rational t;
  std::optional<std::array<Rational, 4>> aux;
};

/// Schur polynomial by the Weyl ratio det[x_i^{lambda_j-j+n}]/Delta(x);
/// falls back to the tableau sum when the x_i are not distinct. Zero when
/// the partition is longer than the number of variables.
Rational schur_eval(const Partition& lambda, std::span<const Rational> x);

/// Schur polynomial as a sum over semistandard tableaux (branching rule).
Rational schur_tableau_eval(const Partition& lambda, std::span<const Rational> x);

/// Hall-Littlewood P by symmetrization over S_n. Throws DegenerateSample
/// when two x_i coincide.
Rational hl_eval(const Partition& lambda, std::span<const Rational> x, const Rational& t);

/// Hall-Littlewood P at a point by the tableau branching rule; valid for
/// repeated values.
Rational hl_branching_eval(const Partition& lambda, std::span<const Rational> x, const Rational& t);

/// Memoizing expander of P_lambda(X_1..X_n; t) into truncated series.
class HLExpander {
 public:
  HLExpander(int n, const Rational& t, int cutoff);

  int variables() const { return n_; }
  int cutoff() const { return cutoff_; }
  const Rational& t() const { return t_; }

  /// P_lambda in the first k variables (k <= n), as a series in n variables.
  const TruncSeries& expand(const Partition& lambda, int k);
  const TruncSeries& expand(const Partition& lambda) { return expand(lambda, n_); }

 private:
  int n_;
  Rational t_;
  int cutoff_;
  std::map<std::pair<Partition, int>, TruncSeries> cache_;
};

/// P_lambda(X_1..X_n; t) truncated at degree cutoff. Throws InvalidInput
/// when |lambda| exceeds the cutoff or the length exceeds n.
TruncSeries hl_expand(const Partition& lambda, int n, const Rational& t, int cutoff);

/// Symplectic character by the Weyl determinant formula. Throws
/// DegenerateSample on a vanishing denominator.
Rational sp_eval(const Partition& lambda, std::span<const Rational> y);

/// Symplectic character as a sum over symplectic tableaux in the alphabet
/// 1 < 1bar < ... < n < nbar.
Rational sp_tableau_eval(const Partition& lambda, std::span<const Rational> y);

/// BC_n-symmetric Hall-Littlewood polynomial K_lambda(y; t) with
/// t_0 = .. = t_3 = 0, by summing over all 2^n n! signed permutations.
Rational bchl_eval(const Partition& lambda, std::span<const Rational> y, const Rational& t);

/// Complete homogeneous symmetric polynomial h_k; zero for k < 0.
Rational h_complete_eval(int k, std::span<const Rational> x);

/// Coefficients c_lambda with f = sum c_lambda P_lambda(X; t), found by
/// triangular elimination over partitions in descending lexicographic order
/// within each degree. Throws InvalidInput when f is not symmetric.
std::map<Partition, Rational> expand_in_hl_basis(const TruncSeries& f, const Rational& t);

/// The Cauchy kernel of Rains' K-tilde polynomials in X_1..X_m, truncated
/// at degree cutoff.
TruncSeries ktilde_kernel(std::span<const Rational> z, const Rational& t, const std::array<Rational, 4>& aux,
                          int m, int cutoff);

/// K-tilde_lambda(z; t_0..t_3; t) for all lambda with length <= m and
/// weight <= cutoff. The extraction is repeated at cutoff + 1 and the
/// results compared; a disagreement throws std::logic_error.
std::map<Partition, Rational> ktilde_coeffs(std::span<const Rational> z, const Rational& t,
                                            const std::array<Rational, 4>& aux, int m, int cutoff);

}  // namespace vertexid
