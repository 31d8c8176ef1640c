#include "vertexid/sampling.hpp"

#include <algorithm>

namespace vertexid {

Rational Sampler::next() {
  // Draw from raw 64-bit output so the sequence does not depend on the
  // standard library's distribution implementations.
  for (;;) {
    auto p = static_cast<long>(engine_() % 19) - 9;
    auto q = static_cast<long>(engine_() % 9) + 1;
    if (p != 0) return make_rational(p, q);
  }
}

std::vector<Rational> Sampler::distinct(int count, const std::vector<Rational>& avoid) {
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational v = next();
    if (std::ranges::find(out, v) == out.end() && std::ranges::find(avoid, v) == avoid.end()) out.push_back(v);
  }
  return out;
}

}  // namespace vertexid
