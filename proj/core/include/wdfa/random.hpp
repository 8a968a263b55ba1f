#pragma once

#include <cstdint>
#include <random>

namespace wdfa {

// Deterministic 64-bit randomness source. mt19937_64 is pinned by the
// standard, so the same seed yields the same stream on every platform;
// integer draws below avoid uniform_int_distribution, whose mapping is
// implementation-defined, to keep generated files byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Unbiased integer in [0, bound), bound >= 1. Multiply-shift with
  // rejection (Lemire's method).
  std::uint64_t below(std::uint64_t bound);

  // Double in [0, 1) built from 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Fresh seed from the OS entropy pool, for runs without an explicit seed.
std::uint64_t entropy_seed();

}  // namespace wdfa
