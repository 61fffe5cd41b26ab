#pragma once

#include <cstdint>

namespace ubisim::rng {

/// SplitMix64 finalizer: a bijective avalanche mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// Counter-based draw: the value for (seed, stream, counter) depends on
/// nothing else, so draws can be produced in any order or in parallel.
constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t counter) {
  std::uint64_t key = mix64(seed + kGolden * (stream + 1));
  return mix64(key + kGolden * (counter + 1));
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Stream ids; changing these changes every generated population.
enum Stream : std::uint64_t {
  kAlphaStream = 1,
};

/// Seed of sweep cell (b_d index, phi index, replicate). Stable across
/// versions: it only mixes the indices, never grid values or positions of
/// other cells.
constexpr std::uint64_t cell_seed(std::uint64_t base_seed, std::uint64_t b_d_index,
                                  std::uint64_t phi_index, std::uint64_t replicate) {
  std::uint64_t h = mix64(base_seed ^ 0x5ca1ab1e0ddba11ULL);
  h = mix64(h + kGolden * (b_d_index + 1));
  h = mix64(h + kGolden * (phi_index + 1));
  h = mix64(h + kGolden * (replicate + 1));
  return h;
}

}  // namespace ubisim::rng
