#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

#include "mti/types.hpp"

namespace mti {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Stable 64-bit combination of seed components. Used to derive independent
/// per-trial streams so trial results do not depend on execution order.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc908ull;
  for (std::uint64_t p : parts) {
    std::uint64_t s = h ^ (p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    h = detail::splitmix64(s);
  }
  return h;
}

/// Deterministic random generator (xoshiro256++ seeded via splitmix64).
/// All distributions are implemented on top of the raw stream so results are
/// reproducible independent of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = detail::splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (one spare cached).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Circular complex Gaussian CN(0, 1): I/Q parts of variance 1/2 each.
  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex{re, im} * std::numbers::sqrt2 * 0.5;  // 1/sqrt(2)
  }

  /// Rayleigh with scale parameter sigma (mode), mean sigma*sqrt(pi/2).
  double rayleigh(double sigma) {
    const double u = 1.0 - uniform01();
    return sigma * std::sqrt(-2.0 * std::log(u));
  }

  /// Uniform phase on (-pi, pi].
  double uniform_phase() { return std::numbers::pi * (1.0 - 2.0 * uniform01()); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4] = {};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mti
