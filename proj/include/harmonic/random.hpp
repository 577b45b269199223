#ifndef HARMONIC_RANDOM_HPP
#define HARMONIC_RANDOM_HPP

// Seeded random inputs. One independent stream per (seed, label, index), so
// results do not depend on the order in which trials are run.

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace harmonic {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::mt19937_64 stream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  const std::uint64_t tag = fnv1a(label);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform in [0, 1). Bit-level so values are identical across standard libraries.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform in [-1, 1).
inline double uniform(std::mt19937_64& rng) { return 2.0 * unit_uniform(rng) - 1.0; }

/// Uniform in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

/// Uniform integer in [0, n).
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Complex entries with independent uniform parts in [-1, 1).
inline std::vector<std::complex<double>> random_complex(std::mt19937_64& rng, std::size_t m) {
  std::vector<std::complex<double>> v(m);
  for (auto& z : v) {
    const double re = uniform(rng);
    z = {re, uniform(rng)};
  }
  return v;
}

}  // namespace harmonic

#endif  // HARMONIC_RANDOM_HPP
