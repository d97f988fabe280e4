#pragma once

// Counter-based deterministic RNG (SplitMix64 core). Behavior is fully
// specified by this file, so streams reproduce bit-for-bit across platforms
// and across serial/parallel schedules: every (seed, stream) pair is an
// independent substream, and consumers derive one substream per Monte Carlo
// trial / simulation channel instead of sharing a generator.

#include <cstdint>
#include <cmath>

#include "tcnav/core.hpp"

namespace tcnav {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    // Two mixing rounds decorrelate (seed, stream) pairs.
    std::uint64_t s = seed;
    const std::uint64_t a = detail::splitmix64(s);
    s = a ^ (0xD1342543DE82EF95ULL * (stream + 1));
    state_ = detail::splitmix64(s);
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // Box-Muller; the spare value is cached so draw order is deterministic.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  VecX normal_vec(int n) {
    VecX v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Vec3 normal_vec3() {
    Vec3 v;
    for (int i = 0; i < 3; ++i) v(i) = normal();
    return v;
  }

 private:
  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace tcnav
