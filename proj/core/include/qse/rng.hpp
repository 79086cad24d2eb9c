#pragma once

#include <cstdint>
#include <random>

namespace qse {

// splitmix64 step; used to whiten user-facing seeds before they reach the
// mt19937_64 engines and to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of sub-stream `index` under a master seed. Trials seeded this way can
// run in any order (or in parallel) and still reproduce the sequential run.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  std::uint64_t b = splitmix64(s);
  return splitmix64(s) ^ (b >> 17);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  return std::mt19937_64(splitmix64(s));
}

// Canonical double in [0, 1) from the top 53 bits; used instead of
// std::uniform_real_distribution so sampling is reproducible by construction.
inline double canonical_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qse
