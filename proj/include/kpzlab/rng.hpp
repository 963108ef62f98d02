#pragma once

#include <array>
#include <cstdint>

namespace kpz {

// Identifies an independent reproducible random stream. Identical
// (seed, stream) pairs yield identical draws on every platform: the
// generator is counter-based (Philox-4x32-10), so no state beyond the
// pair and a draw index is involved.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// One raw Philox-4x32-10 block. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_block(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key);

// Philox-4x32-10 engine with the key schedule
//   key     = (seed_lo32, seed_hi32)
//   counter = (block_lo32, block_hi32, stream_lo32, stream_hi32)
// where "block" is the number of 128-bit blocks consumed so far.
class Philox {
 public:
  explicit Philox(RngSpec spec);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on the open interval (0,1); never returns an endpoint.
  double next_double();
  // Uniform on (lo, hi).
  double next_double(double lo, double hi);
  // Uniform integer in [0, n), unbiased. n must be > 0.
  std::uint64_t next_below(std::uint64_t n);
  // Standard normal, Box-Muller (pairs are cached).
  double next_normal();
  // Exponential with the given rate > 0.
  double next_exponential(double rate);

  const RngSpec& spec() const { return spec_; }

 private:
  void refill();

  RngSpec spec_;
  std::array<std::uint32_t, 2> key_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

// Draw from Poisson(mean). Knuth's product method for small means,
// Hormann's PTRS transformed rejection for mean >= 10.
// mean must be finite and >= 0.
std::uint64_t sample_poisson_count(double mean, Philox& rng);
std::uint64_t sample_poisson_count(double mean, RngSpec spec);

}  // namespace kpz
