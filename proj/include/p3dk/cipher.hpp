// SPDX-License-Identifier: MIT
//
// 243-bit block cipher over a 744-bit expanded state.
//
// Encryption of one block:
//   state = cube_encode(p31) ^ k_0
//   for r in 1..16:
//     SubBytes (nibble-triple S-box) ; ShiftRows ; MixColumns if r is even ;
//     state ^= k_r
//
// Experimental construction. It has no security claim.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>

#include "p3dk/cube_codec.hpp"
#include "p3dk/sbox3d.hpp"

namespace p3dk {

inline constexpr std::size_t kBlockBits = 243;  // 3^5
inline constexpr std::size_t kPaddedBlockBits = kPlainBlockBytes * 8;
inline constexpr std::size_t kStateBits = kStateBytes * 8;
inline constexpr std::size_t kStateRows = 3;
inline constexpr std::size_t kStateCols = 31;
inline constexpr int kRounds = 16;
inline constexpr std::size_t kRoundKeyStride = 47;  // coprime to 744

// 93-byte working state. Flat bytes, a 3x31 row-major grid, and 62 nibble
// triples all alias the same buffer.
class State93 {
 public:
  State93() = default;
  explicit State93(const Block93 &bytes) : bytes_(bytes) {}

  std::span<std::uint8_t, kStateBytes> bytes() noexcept { return bytes_; }
  std::span<const std::uint8_t, kStateBytes> bytes() const noexcept { return bytes_; }
  const Block93 &block() const noexcept { return bytes_; }

  std::uint8_t &at(std::size_t row, std::size_t col) noexcept { return bytes_[kStateCols * row + col]; }
  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return bytes_[kStateCols * row + col];
  }

  std::uint8_t nibble(std::size_t k) const noexcept {
    const std::uint8_t b = bytes_[k / 2];
    return (k % 2 == 0) ? static_cast<std::uint8_t>(b >> 4) : static_cast<std::uint8_t>(b & 0xF);
  }
  NibbleTriple triple(std::size_t t) const noexcept {
    return {nibble(3 * t), nibble(3 * t + 1), nibble(3 * t + 2)};
  }

  State93 &operator^=(const Block93 &key) noexcept {
    for (std::size_t i = 0; i < kStateBytes; ++i) bytes_[i] ^= key[i];
    return *this;
  }

  friend bool operator==(const State93 &, const State93 &) = default;

 private:
  Block93 bytes_{};
};

// 243 key bits in 31 bytes; the trailing 5 bits must be zero.
class MasterKey {
 public:
  /// Throws KeyFormatError on a size other than 31 or nonzero padding bits.
  static MasterKey from_bytes(std::span<const std::uint8_t> bytes);

  const Block31 &bytes() const noexcept { return bytes_; }

  friend bool operator==(const MasterKey &, const MasterKey &) = default;

 private:
  explicit MasterKey(const Block31 &bytes) : bytes_(bytes) {}
  Block31 bytes_;
};

/// Raw 31-byte key file. IoError if unreadable, KeyFormatError otherwise.
MasterKey load_key_file(const std::filesystem::path &path);

struct ExpandedKey {
  Block93 k93;
  unsigned key_rotation;  // rho, in bits
  int sbox_rotation;      // R
  std::array<Block93, kRounds + 1> round_keys;
  SBox3D sbox;
};

/// Draws rho then R from the key-seeded generator.
ExpandedKey expand_key(const MasterKey &key);
/// Fixed rotations; for tests that need to pin rho or R.
ExpandedKey expand_key_with(const MasterKey &key, unsigned key_rotation, int sbox_rotation);

/// MSB-first zero-extension of up to 243 bits into a 31-byte block.
/// `bits` must hold at least ceil(bit_len / 8) bytes; extra bits are ignored.
Block31 pad_block(std::span<const std::uint8_t> bits, std::size_t bit_len);

/// Rotate a 744-bit MSB-first string left: out bit i = in bit (i + n) mod 744.
Block93 rotl_bits(const Block93 &in, std::size_t n) noexcept;

// new[r][j] = old[r][(j + r) mod 31]
void shift_rows(State93 &s) noexcept;
void inv_shift_rows(State93 &s) noexcept;

// Per column (u, v, w) -> (u^v, v^w, u^v^w).
void mix_columns(State93 &s) noexcept;
void inv_mix_columns(State93 &s) noexcept;

struct RoundOptions {
  bool mix_columns = true;
};

/// Throws LengthError unless `p31` is 31 bytes.
Block93 encrypt_block(std::span<const std::uint8_t> p31, const ExpandedKey &ek,
                      RoundOptions options = {});

/// Throws LengthError unless `c93` is 93 bytes; IntegrityError or
/// RangeError from the cube decoder usually mean a wrong key.
Block31 decrypt_block(std::span<const std::uint8_t> c93, const ExpandedKey &ek);

}  // namespace p3dk
