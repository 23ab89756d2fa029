#pragma once

#include <evoalg/matrix.hpp>

#include <cstdint>
#include <random>

namespace evoalg {

/// Deterministic source of small rational test values. Numerators are drawn
/// from {-3..3}; denominators from {1..den_max}. The same seed always
/// reproduces the same stream.
class SmallRatSampler {
 public:
  explicit SmallRatSampler(std::uint64_t seed) : rng_(seed) {}

  Rat next(unsigned den_max = 2) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, den_max);
    return rat(num(rng_), den(rng_));
  }

  Rat next_nonzero(unsigned den_max = 2) {
    for (;;) {
      Rat q = next(den_max);
      if (q != 0) return q;
    }
  }

  /// Integer coefficient in {-3..3}, as used for derivation-basis combinations.
  Rat next_int() {
    std::uniform_int_distribution<long> num(-3, 3);
    return Rat(num(rng_));
  }

  RatVector element(std::size_t n, unsigned den_max = 2) {
    RatVector v(n);
    for (Rat& x : v) x = next(den_max);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace evoalg
