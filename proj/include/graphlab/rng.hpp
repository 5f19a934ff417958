// SPDX-License-Identifier: Apache-2.0
//
// SplitMix64 in counter mode ("SplitMix-CTR").
//
// A (seed, stream) pair is hashed to a 64-bit key
//
//     key = mix64(seed ^ mix64(stream + 0x9E3779B97F4A7C15))
//
// and word i of the stream is the i-th SplitMix64 output started at key:
//
//     word(i) = mix64(key + (i + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 output finalizer. Uniform doubles take the top
// 53 bits: (word >> 11) * 2^-53, in [0, 1). Child streams are derived by using
// the parent key as the child seed. All arithmetic is modulo 2^64, so any port
// reproduces the same words bit for bit.
#pragma once

#include <cstdint>

namespace glab {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct SampleSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  [[nodiscard]] constexpr std::uint64_t key() const noexcept {
    return mix64(seed ^ mix64(stream + kGoldenGamma));
  }
  // Independent sub-stream k of this stream.
  [[nodiscard]] constexpr SampleSeed child(std::uint64_t k) const noexcept { return {key(), k}; }

  friend constexpr bool operator==(const SampleSeed&, const SampleSeed&) = default;
};

constexpr std::uint64_t stream_word(std::uint64_t key, std::uint64_t index) noexcept {
  return mix64(key + (index + 1) * kGoldenGamma);
}

constexpr double word_to_unit(std::uint64_t w) noexcept {
  return static_cast<double>(w >> 11) * 0x1.0p-53;
}

// Sequential cursor over one stream.
class CounterStream {
 public:
  explicit constexpr CounterStream(SampleSeed s) noexcept : key_(s.key()) {}

  constexpr std::uint64_t next_u64() noexcept { return stream_word(key_, counter_++); }
  constexpr double next_unit() noexcept { return word_to_unit(next_u64()); }

  // Unbiased integer in [0, bound) (Lemire multiply-shift with rejection).
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const auto m = static_cast<unsigned __int128>(next_u64()) * bound;
      if (static_cast<std::uint64_t>(m) >= threshold) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  [[nodiscard]] constexpr std::uint64_t position() const noexcept { return counter_; }
  constexpr void seek(std::uint64_t position) noexcept { counter_ = position; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace glab
