#pragma once

#include <cmath>
#include <cstdint>

namespace modvit {

/// Deterministic 64-bit random generator (xoshiro256** seeded through
/// splitmix64). All distributions are implemented here with plain integer
/// and IEEE-754 arithmetic so that a (family, seed) pair produces the same
/// stream on every platform. The one caveat is normal(), which calls
/// std::log; libm implementations agree to within an ulp, and every use in
/// this project rounds the draw to an integer, so the sequences match in
/// practice across common toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the four xoshiro words
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return next_u64();  // full 64-bit range
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
    std::uint64_t x = next_u64();
    while (x > limit) x = next_u64();
    return lo + x % range;
  }

  std::int64_t uniform_index(std::int64_t n) {
    return static_cast<std::int64_t>(uniform_int(0, static_cast<std::uint64_t>(n - 1)));
  }

  /// Gaussian draw via the Marsaglia polar method (consumes a variable
  /// number of uniforms; second value of each pair is cached).
  double normal(double mean, double stddev) {
    if (have_cached_) {
      have_cached_ = false;
      return mean + stddev * cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    have_cached_ = true;
    return mean + stddev * u * f;
  }

  /// Derive an independent child seed. Used to give every benchmark cell and
  /// every generated graph its own reproducible stream: the child seed is
  /// splitmix64 applied to (base_seed, stream), so sibling streams do not
  /// depend on how much the parent has been consumed.
  static std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream) {
    std::uint64_t x = base_seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    const std::uint64_t a = splitmix64(x);
    const std::uint64_t b = splitmix64(x);
    return a ^ rotl(b, 31);
  }

  static Rng fork(std::uint64_t base_seed, std::uint64_t stream) {
    return Rng(derive_seed(base_seed, stream));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4];
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace modvit
