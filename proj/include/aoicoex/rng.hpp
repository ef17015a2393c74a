#pragma once

#include <cstdint>
#include <random>

// Deterministic per-run random streams. Each run derives its own seed from
// (master_seed, run_index) through a splitmix64 mix, so runs are independent
// of each other and of the execution order; the engine itself is the fully
// specified std::mt19937_64.

namespace aoicoex {

// One splitmix64 output step (Steele, Lea & Flood mixing constants).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent, order-free seed for one run of a Monte Carlo batch.
constexpr std::uint64_t run_seed(std::uint64_t master_seed,
                                 std::uint64_t run_index) {
  return splitmix64(splitmix64(master_seed) ^
                    splitmix64(0x5851F42D4C957F2DULL + run_index));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with the canonical 53-bit construction;
  // bit-identical across platforms (std::uniform_real_distribution is not).
  double u01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aoicoex
