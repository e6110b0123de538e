#pragma once

#include <cstdint>

namespace symplectica {

/// Deterministic generator used for every seeded draw in the library.
/// splitmix64 core with hand-rolled uniform/normal transforms, so streams
/// depend only on the seed, never on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (polar form rejected; trig form is
  /// branch-free and keeps the stream aligned).
  double normal();

  /// exp(U * ln(hi/lo)) * lo: log-uniform on [lo, hi].
  double log_uniform(double lo, double hi);

  int uniform_int(int lo, int hi);  // inclusive bounds

  /// Independent child stream for (seed, index) pairs.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace symplectica
