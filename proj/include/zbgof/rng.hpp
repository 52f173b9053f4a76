#pragma once

#include <cstdint>
#include <random>

namespace zbgof {

/// (master_seed, stream_index) fully determines every draw. Replication r of
/// a stream uses an engine keyed by splitmix64 mixing of all three indices,
/// so replications can run in any order (or in parallel) and still produce
/// identical results.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Versioned RNG: mt19937_64 (output fully specified by the standard) keyed
/// from (master_seed, stream_index, replication_index) via splitmix64.
/// Variate transforms are implemented in alternatives.cpp, never taken from
/// the implementation-defined std distributions.
inline std::mt19937_64 make_engine(const SeedSpec& seed, std::uint64_t replication) {
  std::uint64_t s = seed.master_seed;
  std::uint64_t k1 = splitmix64(s);
  s ^= seed.stream_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  std::uint64_t k2 = splitmix64(s);
  s ^= replication * 0x9e3779b97f4a7c15ULL + 1;
  std::uint64_t k3 = splitmix64(s);
  std::seed_seq seq{static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k1 >> 32),
                    static_cast<std::uint32_t>(k2), static_cast<std::uint32_t>(k2 >> 32),
                    static_cast<std::uint32_t>(k3), static_cast<std::uint32_t>(k3 >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform draw in the open interval (0,1), 53-bit resolution.
inline double uniform01(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace zbgof
