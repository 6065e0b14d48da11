#pragma once

#include <cstdint>
#include <random>

namespace isacnd {

// splitmix64 step, used to turn (seed, tag) pairs into well-mixed substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index = 0) {
  std::uint64_t s = base;
  std::uint64_t a = splitmix64(s);
  s ^= tag * 0x9e3779b97f4a7c15ULL;
  std::uint64_t b = splitmix64(s);
  s ^= (index + 1) * 0xd1b54a32d192ed03ULL;
  std::uint64_t c = splitmix64(s);
  return a ^ (b << 1) ^ c;
}

inline std::mt19937_64 make_engine(std::uint64_t base, std::uint64_t tag, std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(base, tag, index));
}

// uniform double in [0, 1) with 53 random bits; avoids distribution objects so the
// byte-level stream is pinned by the engine alone.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// unbiased integer in [0, n) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
  std::uint64_t v = rng();
  while (v > limit) v = rng();
  return v % n;
}

inline int uniform_int(std::mt19937_64& rng, int n) {
  return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
}

}  // namespace isacnd
