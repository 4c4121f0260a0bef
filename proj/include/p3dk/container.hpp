// SPDX-License-Identifier: MIT
//
// Codebook file mode. Every 243-bit slice of the plaintext is encrypted on
// its own with the same expanded key, so equal slices give equal ciphertext
// blocks.
//
// On-disk layout (all offsets in bytes):
//   0   4  magic "P3DK"
//   4   1  version 0x01
//   5   1  flags 0x00
//   6   8  plaintext length in bits, little-endian
//   14  .. ceil(bits / 243) blocks of 93 bytes
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "p3dk/cipher.hpp"

namespace p3dk {

inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'P', '3', 'D', 'K'};
inline constexpr std::uint8_t kContainerVersion = 0x01;
inline constexpr std::size_t kContainerHeaderBytes = 14;

struct CipherContainer {
  std::uint64_t plain_bit_len = 0;
  std::vector<Block93> blocks;

  std::vector<std::uint8_t> serialize() const;
  /// FormatError on bad magic, version, flags or a truncated header;
  /// LengthError when the payload does not hold ceil(bits / 243) blocks.
  static CipherContainer parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const CipherContainer &, const CipherContainer &) = default;
};

constexpr std::uint64_t blocks_for_bits(std::uint64_t bits) noexcept {
  return bits / kBlockBits + (bits % kBlockBits != 0 ? 1 : 0);
}

CipherContainer encrypt_stream(std::span<const std::uint8_t> plaintext, const MasterKey &key);
CipherContainer encrypt_stream(std::span<const std::uint8_t> plaintext, const ExpandedKey &ek);

/// Decrypts and truncates to the recorded length. Nonzero padding bits in a
/// decrypted block raise IntegrityError.
std::vector<std::uint8_t> decrypt_stream(const CipherContainer &container, const MasterKey &key);
std::vector<std::uint8_t> decrypt_stream(const CipherContainer &container, const ExpandedKey &ek);

}  // namespace p3dk
