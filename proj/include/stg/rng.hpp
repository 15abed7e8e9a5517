#pragma once

#include "stg/rational.hpp"

#include <cstdint>
#include <vector>

namespace stg {

// Deterministic PRNG used by the random-game generator and the stats harness.
// The std <random> distributions are implementation-defined, which would break
// byte-identical output across platforms, so the few draws we need are spelled
// out here: splitmix64 stream, Lemire bounded sampling, Fisher-Yates shuffles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, n). n must be > 0.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform permutation of 0..n-1 (Fisher-Yates, draws in descending index order).
  std::vector<std::uint32_t> permutation(std::uint32_t n);

  // True with probability p (0 <= p <= 1), decided exactly from one 53-bit draw.
  bool chance(const Rational& p);

 private:
  std::uint64_t state_;
};

// Stateless splitmix64 finalizer; also the documented per-game seed derivation
// for stats runs: game i of a run with base seed s uses mix_seed(s, i).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace stg
