// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>

namespace p3dk {

// Deterministic schedule generator: FNV-1a folds the key bytes into a 64-bit
// seed, xorshift64 (13, 7, 17) produces the draws. Not a CSPRNG.
//
// Draw order consumed by key expansion:
//   1. key rotation      next_below(744)
//   2. S-box rotation    next_below(16)
class KeyedRng {
 public:
  static constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ull;
  static constexpr std::uint64_t kFnvPrime = 0x00000100000001B3ull;

  /// Throws SeedError on empty input.
  static KeyedRng seed_from_bytes(std::span<const std::uint8_t> key_bytes);

  /// Raw state constructor for tests; a zero state is remapped to the FNV
  /// offset basis so the generator never sticks at zero.
  explicit KeyedRng(std::uint64_t state) noexcept
      : state_(state == 0 ? kFnvOffset : state) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t s = state_;
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    state_ = s;
    return s;
  }

  /// next_u64() mod n. Throws RangeError when n == 0.
  std::uint64_t next_below(std::uint64_t n);

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t s = KeyedRng::kFnvOffset;
  for (std::uint8_t b : bytes) {
    s = (s ^ b) * KeyedRng::kFnvPrime;
  }
  return s;
}

}  // namespace p3dk
