// Seeded RNG with a fixed uint64 -> double conversion so that streams are
// identical across standard-library implementations.
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace grunsky {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform on the closed unit disk, by rejection.
  std::complex<double> unit_disk() {
    for (;;) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace grunsky
