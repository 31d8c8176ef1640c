#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vertexid/rational.hpp"

namespace vertexid {

/// Deterministic source of small nonzero rationals p/q with |p|, q <= 9.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();
  /// `count` pairwise distinct values, none in `avoid`.
  std::vector<Rational> distinct(int count, const std::vector<Rational>& avoid = {});
  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vertexid
