#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace staircase {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// STAIRCASE_SEED from the environment if set and numeric, else kDefaultSeed.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("STAIRCASE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

}  // namespace staircase
