#pragma once

#include <cstdint>

namespace walkbound {

// SplitMix64 (Steele-Lea-Flood mixer). The sampler's reproducibility contract
// is built on it: path i draws from a SplitMix64 stream whose initial state is
// the (i+1)-th output of a master SplitMix64 seeded with the run seed. The
// master outputs have the closed form below, so any path's stream can be
// reconstructed independently of scheduling.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += kSplitMix64Gamma;
    return splitmix64_mix(state);
  }
};

inline std::uint64_t path_stream_seed(std::uint64_t seed, std::uint64_t path) {
  return splitmix64_mix(seed + (path + 1) * kSplitMix64Gamma);
}

}  // namespace walkbound
