#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace phd {

// SplitMix64 generator. Small state, identical output on every platform,
// which is what the determinism contracts and checkpoint resume rely on.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  // Uniform integer in [lo, hi], both bounds inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi);

  // Box-Muller; draws two uniforms per call, no cached second value.
  double normal(double mean, double stddev);

  uint64_t state() const { return state_; }

private:
  uint64_t state_;
};

uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64(std::string_view s);

// Labeled seed derivation: every subsystem stream is a pure function of
// (base seed, label, indices), so scheduling cannot change any draw.
uint64_t derive_seed(uint64_t base, std::string_view label, uint64_t a = 0, uint64_t b = 0);

}  // namespace phd
