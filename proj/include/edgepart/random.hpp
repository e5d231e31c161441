#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace edgepart {

/// The project-wide generator. mt19937_64 has a standardized output
/// sequence; the helpers below avoid std:: distributions, whose results are
/// implementation-defined, so seeded outputs match across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Values below 2^64 mod bound would bias the low residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// k distinct values from [0, n), in draw order (partial Fisher-Yates).
inline std::vector<std::uint64_t> sample_without_replacement(Rng& rng, std::uint64_t n, std::uint64_t k) {
  std::vector<std::uint64_t> pool(n);
  for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace edgepart
