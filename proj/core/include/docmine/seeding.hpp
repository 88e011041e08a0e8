#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace docmine {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL);
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for one (repository, source) model, independent of scheduling order.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view repo_id,
                          std::string_view source);

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform, unlike
/// std::uniform_real_distribution.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by rejection sampling; portable.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);

}  // namespace docmine
