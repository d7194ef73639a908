#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace rigidlab {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent child seed for stream `k` of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(splitmix64(seed) ^ (k * 0xd1b54a32d192ed03ULL));
}

/// Uniform integer in [0, n).  Modulo bias is below 2^-32 for the ranges used here.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return rng() % n; }

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Fisher-Yates with the portable `uniform_below` (std::shuffle is not
/// reproducible across standard libraries).
template <typename T>
void seeded_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

}  // namespace rigidlab
