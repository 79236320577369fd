#pragma once

#include <cstdint>

#include "tlab/scalar.hpp"

namespace tlab {

// Deterministic splittable RNG (splitmix64). Suites derive one independent
// stream per trial via derive(), so trials can run in parallel and still
// reproduce bit-identically.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // inclusive bounds
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Scalar rational(long long span, long long den_max) {
    return Scalar(uniform(-span, span), uniform(1, den_max));
  }

  static uint64_t derive(uint64_t seed, uint64_t stream) {
    Rng r(seed ^ (0x517cc1b727220a95ull * (stream + 1)));
    return r.next();
  }

 private:
  uint64_t state_;
};

}  // namespace tlab
