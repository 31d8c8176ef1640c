#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "vertexid/partitions.hpp"
#include "vertexid/rational.hpp"

namespace vertexid {

/// A function of n rational arguments, evaluated pointwise.
using Evaluator = std::function<Rational(std::span<const Rational>)>;

/// D_n(z; q, t) f at a point:
/// sum_S z^|S| t^{|S|(|S|-1)/2} prod_{i in S, j not in S} (t x_i - x_j)/(x_i - x_j) f(x with x_i -> q x_i, i in S).
/// Throws DegenerateSample when two coordinates coincide.
Rational apply_Dn(const Evaluator& f, const Rational& z, const Rational& q, const Rational& t,
                  std::span<const Rational> point);

/// prod_i (1 + z q^{lambda_i} t^{n-i}) with 0^0 = 1.
Rational macdonald_eigenvalue(const Partition& lambda, int n, const Rational& z, const Rational& q, const Rational& t);

/// Checks D_n f = eigenvalue * f at `samples` random points, with f the
/// Schur polynomial (q = t) or the Hall-Littlewood polynomial (q = 0).
/// Throws InvalidInput for any other q.
bool eigen_check(const Partition& lambda, int n, const Rational& z, const Rational& q, const Rational& t, int samples,
                 std::uint64_t seed = 1);

}  // namespace vertexid
