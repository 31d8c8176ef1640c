#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vertexid/partitions.hpp"
#include "vertexid/rational.hpp"
#include "vertexid/trunc_series.hpp"

namespace vertexid {

/// Finite matrix of nonnegative integers, weakly decreasing along rows and
/// columns, inside a rows x cols base. Indices are 0-based.
class PlanePartition {
 public:
  PlanePartition() = default;
  PlanePartition(int rows, int cols);
  /// Throws InvalidInput for ragged input, negative entries or a violation
  /// of the monotonicity conditions.
  explicit PlanePartition(std::vector<std::vector<int>> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Zero outside the base.
  int at(int i, int j) const;
  void set(int i, int j, int value);
  int volume() const;
  bool is_symmetric() const;
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// Diagonal slice with offset k: (pi(l, l+k))_l for k >= 0 and
  /// (pi(l-k, l))_l for k < 0.
  Partition slice(int k) const;
  /// Rebuilds a rows x cols plane partition from its slices, listed from
  /// offset -(rows-1) to cols-1. Throws InvalidInput if they do not
  /// interlace or do not fit.
  static PlanePartition from_slices(int rows, int cols, std::span<const Partition> slices);

  /// Rows of space-separated integers, one per line.
  std::string to_text() const;
  static PlanePartition from_text(std::string_view text);
  /// JSON array of arrays.
  std::string to_json() const;
  static PlanePartition from_json(std::string_view text);

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  void check() const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<int>> entries_;
};

struct PathStats {
  /// p_d: paths at height > 0.
  std::map<int, int> by_depth;
  /// p~_d: including height-0 paths of the square framing (when requested).
  std::map<int, int> by_depth_framed;
  /// p°_d: pairs of mirror paths avoiding the main diagonal.
  std::map<int, int> off_diagonal_pairs;
  /// p•_d: paths meeting the main diagonal, height > 0.
  std::map<int, int> diagonal;
  /// p~•_d: paths meeting the main diagonal, including height 0.
  std::map<int, int> diagonal_framed;
};

/// Path statistics of pi. With a framing n, pi must fit in the n x n
/// square and the height-0 counts are filled in. The off-diagonal and
/// diagonal splits are filled in only for symmetric pi. Throws InvalidInput
/// when the framing does not cover the support.
PathStats path_stats(const PlanePartition& pi, std::optional<int> framing = std::nullopt);

/// prod_d (1 - t^d)^{counts[d]}
Rational path_weight(const std::map<int, int>& counts, const Rational& t, bool odd_depths_only = false);

/// All plane partitions with base in m x n and volume <= max_volume.
std::vector<PlanePartition> enumerate_pp(int m, int n, int max_volume);

/// All plane partitions with base in m x n whose central slice has weight
/// <= max_central (the x-degree in the Cauchy-type generating series).
std::vector<PlanePartition> enumerate_pp_by_central(int m, int n, int max_central);

enum class CentralCondition { None, EvenCentral, EvenColumnsCentral };

/// Symmetric plane partitions in the size x size box with volume <=
/// max_volume satisfying the condition on the diagonal.
std::vector<PlanePartition> enumerate_symmetric_pp(int size, int max_volume, CentralCondition condition);

/// Symmetric plane partitions in the size x size box whose central slice has
/// weight <= max_central.
std::vector<PlanePartition> enumerate_symmetric_pp_by_central(int size, int max_central, CentralCondition condition);

/// A symplectic plane partition:
/// 0 = lambda(0) < lambda(1) < ... < lambda(m) = mubar(n) > mu(n) > mubar(n-1) > ... > mu(1) > mubar(0) = 0
/// with length(mubar(i)) <= i.
struct SymplecticPP {
  std::vector<Partition> lambda;  // lambda(1) .. lambda(m)
  std::vector<Partition> mu;      // mu(1) .. mu(n)
  std::vector<Partition> mubar;   // mubar(0) .. mubar(n)

  const Partition& central() const { return mubar.back(); }
  /// The full chain from lambda(0) to mubar(0).
  std::vector<Partition> chain() const;
};

/// Requires m <= n.
std::vector<SymplecticPP> enumerate_symplectic_pp(int m, int n, int max_central_weight);

struct GsParams {
  int m = 0;
  int n = 0;
  /// Truncation degree of the returned series.
  int cutoff = 0;
  std::vector<Rational> y;
  Rational t = 0;
  /// symp-pp-vol only: bound on the central weight (default cutoff / 2).
  std::optional<int> max_central;
};

/// Names accepted by gs_lhs.
std::vector<std::string> gs_ids();

/// Enumerated left-hand side of a plane-partition generating series.
/// Cauchy-type series (s-pp-gs, hl-pp-gs, pp-asm-gs, s-refined-pp-gs,
/// symp-cauch-pp, symp-pp-uasm) are series in X_1..X_m with y and t
/// substituted; Littlewood-type series (s-little3-pp-gs, hl-little3-pp-gs,
/// sym-pp-osasm, s-refined-little-pp-gs) are series in X_1..X_n; volume
/// series (vol-pp, macmahon, vuletic-gs) are series in q; symp-pp-vol is a
/// series in q^{1/2} (cutoff counted in q^{1/2}). Throws InvalidInput for
/// an unknown id.
TruncSeries gs_lhs(std::string_view id, const GsParams& params);

}  // namespace vertexid
