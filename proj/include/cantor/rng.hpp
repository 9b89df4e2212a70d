#ifndef CANTOR_RNG_HPP
#define CANTOR_RNG_HPP

#include <cstdint>
#include <random>

namespace cantor {

// splitmix64; used to derive independent stream seeds from
// (master_seed, k, replication index) so results are reproducible
// under any scheduling.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return mix64(mix64(mix64(master) ^ a) ^ b);
}

// Uniform in [0,1) with 53 random bits. Avoids std::uniform_real_distribution
// so the draw sequence is identical across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
  return uniform01(rng) < p;
}

}  // namespace cantor

#endif
