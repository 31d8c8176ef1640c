#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vertexid/rational.hpp"

namespace vertexid {

/// How the two sides of an identity are represented.
/// RationalPoint: every variable sampled, both sides exact rationals.
/// SeriesInX: x formal, everything else sampled, truncated series in x.
/// QSeries: a single formal variable q (or q^{1/2}).
enum class Mode { RationalPoint, SeriesInX, QSeries };
enum class Status { Pass, Fail, SkippedDegenerate };
enum class Provenance { Classical, Theorem, Conjecture };

std::string to_string(Mode mode);
std::string to_string(Status status);
std::string to_string(Provenance provenance);

struct IdentityInfo {
  std::string id;
  /// The equation label it checks, e.g. "s-cauchy-refine".
  std::string equation;
  Mode mode;
  Provenance provenance;
  int default_n;
  /// Zero when the identity has no second size.
  int default_m;
  int default_degree;
  std::string summary;
};

/// The registry, in a fixed order.
const std::vector<IdentityInfo>& list_identities();
/// Throws InvalidInput for an unknown id.
const IdentityInfo& identity_info(std::string_view id);

struct VerifyParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> degree;
  std::uint64_t seed = 1;
  int samples = 3;
  /// Fixed t instead of a sampled one.
  std::optional<Rational> t;
};

struct Report {
  std::string id;
  Mode mode = Mode::RationalPoint;
  Provenance provenance = Provenance::Classical;
  int n = 0;
  int m = 0;
  int degree = 0;
  int samples = 0;
  std::optional<Rational> t;
  std::uint64_t seed = 0;
  /// Seeds of the samples actually compared (after degenerate retries).
  std::vector<std::uint64_t> sample_seeds;
  Status status = Status::Pass;
  std::optional<std::string> first_mismatch;
  /// FNV-1a digests of the canonical text of each side, over all samples.
  std::string lhs_digest;
  std::string rhs_digest;
  double elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
  /// One JSON object; elapsedMs is included only when `timing` is set so
  /// that equal inputs give byte-identical output.
  std::string to_json(bool timing = false) const;
  static std::string csv_header(bool timing = false);
  std::string to_csv_row(bool timing = false) const;
};

/// Runs one registered identity. Sizes default to the registry values.
/// Throws InvalidInput for an unknown id or sizes outside the guards.
Report verify_identity(std::string_view id, const VerifyParams& params);

/// Pfaffian analogue of Cauchy-Binet for a random antisymmetric M x M
/// matrix A and a random m x M matrix T, and its Vandermonde
/// specialization T_ij = x_i^{j-1}. Requires m even and m <= M <= 8.
Report verify_pfaffian_cauchy_binet(int m, int M, std::uint64_t seed);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace vertexid
