#pragma once

// Seeded random source shared by every sampler in the library.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers and unit-interval reals are derived from raw
// engine output by the functions below rather than by the std::*_distribution
// templates, whose algorithms are implementation-defined. Together this makes
// every sampled object a pure function of its seed on any conforming toolchain.

#include <cstdint>
#include <random>

namespace perclab {

using Rng = std::mt19937_64;
using Seed = std::uint64_t;

// splitmix64 finaliser; used to derive independent sub-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the sub-stream `stream` of `seed`. Stream 0 is the seed itself.
inline Seed derive_seed(Seed seed, std::uint64_t stream) {
  return stream == 0 ? seed : mix_seed(seed ^ mix_seed(stream));
}

inline Rng make_rng(Seed seed) { return Rng(seed); }

// Uniform integer in [0, bound). Lemire's multiply-shift with rejection, so
// the result is exactly uniform. bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

}  // namespace perclab
