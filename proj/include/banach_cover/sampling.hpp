#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace bcover {

/// Seeded deterministic RNG. Uniform and normal draws are derived from the
/// raw mt19937_64 stream directly (the engine output is fully specified by
/// the standard, distribution adapters are not), so identical seeds produce
/// identical reports on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal();

  std::vector<double> normal_vec(std::size_t n);

  /// Gaussian direction normalized to unit p-norm (p >= 1).
  std::vector<double> unit_direction(std::size_t n, double p);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bcover
