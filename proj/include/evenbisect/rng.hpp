#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>

namespace evenbisect {

using Seed = std::uint64_t;

inline constexpr Seed default_seed = 42;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of the i-th independent stream under `master`. Stream 0 is `master`
/// itself, so a single trial reproduces a direct call with the same seed.
inline Seed stream_seed(Seed master, std::uint64_t index) {
  return master + index * 0x9E3779B97F4A7C15ULL;
}

inline std::mt19937_64 make_engine(Seed seed) { return std::mt19937_64(splitmix64(seed)); }

/// Worker threads for parallel loops; EVENBISECT_THREADS caps the count.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0)
    hw = 1;
  if (const char *env = std::getenv("EVENBISECT_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1 && static_cast<unsigned long>(cap) < hw)
        hw = static_cast<unsigned>(cap);
    } catch (const std::exception &) {
      // unparsable: ignore
    }
  }
  return hw;
}

} // namespace evenbisect
