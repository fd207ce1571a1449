#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace colnet {

/// Engine used for every stochastic step. Its name is written into run metadata.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64";

/// splitmix64 finalizer applied to (base, stream); used to derive per-document,
/// per-replicate and per-sample seeds so results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a, 64 bit.
inline std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// std::uniform_*_distribution differ between standard libraries, so the
// draws below are spelled out to keep outputs portable.

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace colnet
