#include "stg/rng.hpp"

namespace stg {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::bounded(std::uint64_t n) {
  // Lemire multiply-shift; the tiny modulo bias is irrelevant here and the
  // mapping is fixed forever, which is what reproducibility needs.
  unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * n;
  return static_cast<std::uint64_t>(product >> 64);
}

std::vector<std::uint32_t> Rng::permutation(std::uint32_t n) {
  std::vector<std::uint32_t> out(n);
  for (std::uint32_t i = 0; i < n; ++i) out[i] = i;
  for (std::uint32_t i = n; i > 1; --i) {
    std::uint64_t j = bounded(i);
    std::swap(out[i - 1], out[j]);
  }
  return out;
}

bool Rng::chance(const Rational& p) {
  std::uint64_t draw = next_u64() >> 11;  // 53 uniform bits
  return Rational(BigInt(draw), BigInt(1)) < p * Rational(BigInt(1) << 53);
}

}  // namespace stg
