#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace domainkit {

// Deterministic random source. All stochastic operations take an Rng
// explicitly so that a seed fully determines the run. The transforms below
// are hand-rolled on top of the (bit-exact) mt19937_64 stream because the
// std::*_distribution classes are implementation-defined.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0xC0ECE;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Standard normal via Box-Muller.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // Standard complex normal (unit total variance).
  std::complex<double> complex_gaussian() {
    const double s = 0.7071067811865475244008443621048;
    return {s * gaussian(), s * gaussian()};
  }

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace domainkit
