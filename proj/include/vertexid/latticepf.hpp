#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vertexid/rational.hpp"

namespace vertexid {

enum class DomainKind { Square, PartialSquare, UTurn, PartialUTurn, OffDiagonal, OffDiagonalOdd };

std::string to_string(DomainKind kind);
/// Accepts the names produced by to_string ("square", "partial-square", ...).
DomainKind parse_domain_kind(std::string_view text);

/// Bulk vertex types. In the frame where both lines run south-west to
/// north-east, the in-arrows sit on: a+ {L,B}, a- {R,T}, b+ {L,T},
/// b- {R,B}, c+ {L,R}, c- {B,T}.
enum class VertexType { APlus, AMinus, BPlus, BMinus, CPlus, CMinus };

/// Six-vertex weights as functions of the spectral ratio r = x/y.
struct BoltzmannWeights {
  Rational a, b_plus, b_minus, c_plus, c_minus;

  /// Throws DegenerateSample when r = 1.
  static BoltzmannWeights at_ratio(const Rational& r, const Rational& t);
  const Rational& of(VertexType type) const;
};

/// prod(1 - t x_i y_j)/(Delta(x) Delta(y)) det[(1-t)/((1-x_i y_j)(1-t x_i y_j))].
Rational z_asm_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t);

/// Partial domain wall partition function with m = |x| <= n = |y| rows.
Rational z_asm_partial_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t);

/// Reflecting domain wall partition function (Tsuchiya determinant).
Rational z_uasm_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t);

/// Reflecting partition function with m = |x| <= n = |y| double rows.
Rational z_uasm_partial_closed(std::span<const Rational> x, std::span<const Rational> y, const Rational& t);

/// Off-diagonally symmetric partition function (Kuperberg Pfaffian); |x| even.
Rational z_osasm_closed(std::span<const Rational> x, const Rational& t);

/// Odd-size off-diagonal partition function; |x| odd, all x_i nonzero.
Rational z_osasm_odd_closed(std::span<const Rational> x, const Rational& t);

/// A finished configuration as seen by an enumeration visitor.
struct LatticeConfig {
  /// Types of the bulk vertices, row by row from the top. For the U-turn
  /// domain rows alternate between right- and left-oriented lines.
  std::vector<std::vector<VertexType>> rows;
  Rational weight;
};

struct LatticeSum {
  std::uint64_t count = 0;
  Rational weight_sum = 0;
};

/// Depth-first enumeration of all ice-rule configurations of the domain.
/// Square / UTurn: |x| = |y| = n. Partial variants: |x| = m <= n = |y|.
/// OffDiagonal: |x| even, y unused. OffDiagonalOdd: |x| odd, y unused.
/// Throws InvalidInput when more than 10^7 search states are visited.
LatticeSum enumerate_lattice(DomainKind kind, std::span<const Rational> x, std::span<const Rational> y,
                             const Rational& t, const std::function<void(const LatticeConfig&)>& visit = {});

/// The alternating sign matrix of a square-domain configuration
/// (c+ -> 1, c- -> -1, otherwise 0).
std::vector<std::vector<int>> asm_matrix(const LatticeConfig& config);

}  // namespace vertexid
