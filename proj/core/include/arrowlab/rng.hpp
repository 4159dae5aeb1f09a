#pragma once

// Counter-based pseudorandomness. Every random quantity in the library is a
// pure function of (seed, counter-like arguments); nothing depends on query
// order, which is what makes window sweeps parallel and orbits replayable.

#include <cmath>
#include <cstdint>

namespace arrowlab {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

inline constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t c) {
  return mix64(mix64(a, b), c);
}

inline constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t c, std::uint64_t d) {
  return mix64(mix64(a, b, c), d);
}

// Stable derivation of per-stream seeds (plane products, shards, points).
inline constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                           std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream) ^ kGolden);
}

// Uniform in [0,1).
inline double u01(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Uniform in [0, n) by 128-bit multiply-shift.
inline std::uint64_t bounded(std::uint64_t h, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(h) * n) >> 64);
}

// Standard exponential via inverse CDF; u01 < 1 so the log is finite.
inline double exp_variate(std::uint64_t h) { return -std::log1p(-u01(h)); }

}  // namespace arrowlab
