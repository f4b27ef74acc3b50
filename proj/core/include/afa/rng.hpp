#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace afa {

// Purpose-split deterministic randomness. Every consumer derives its own
// stream from (experiment seed, purpose tag, index), so e.g. attack noise
// never shifts when the shuffle order changes.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view purpose,
                              std::uint64_t index = 0) {
  std::uint64_t state = seed ^ fnv1a64(purpose);
  std::uint64_t a = splitmix64(state);
  state ^= index * 0x9e3779b97f4a7c15ULL;
  return a ^ splitmix64(state);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view purpose,
                                std::uint64_t index = 0) {
  return std::mt19937_64(mix_seed(seed, purpose, index));
}

}  // namespace afa
