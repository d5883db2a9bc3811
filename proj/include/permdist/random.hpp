#pragma once

#include <cstdint>
#include <random>

namespace permdist {

// Seeded random stream shared by every stochastic operation.
//
// Bounded integers and coins are derived from raw mt19937_64 output here
// rather than through <random> distributions, whose algorithms differ between
// standard libraries; this keeps seeded outputs identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); rejection sampling, bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // One draw per call regardless of probability.
  bool bernoulli(double probability) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < probability;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace permdist
