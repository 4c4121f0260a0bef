// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "p3dk/cube_codec.hpp"

namespace p3dk {

struct NibbleTriple {
  std::uint8_t a;  // x-axis
  std::uint8_t b;  // y-axis
  std::uint8_t c;  // z-axis

  constexpr std::uint16_t packed() const noexcept {
    return static_cast<std::uint16_t>((a << 8) | (b << 4) | c);
  }
  static constexpr NibbleTriple unpack(std::uint16_t v) noexcept {
    return {static_cast<std::uint8_t>((v >> 8) & 0xF), static_cast<std::uint8_t>((v >> 4) & 0xF),
            static_cast<std::uint8_t>(v & 0xF)};
  }

  friend bool operator==(const NibbleTriple &, const NibbleTriple &) = default;
};

// Offset of the z-output sequence: it starts at the (16/2 + 1)th hex digit.
inline constexpr int kSboxDepthOffset = 8;
inline constexpr int kSboxRotations = 16;
inline constexpr std::size_t kSboxEntries = 4096;

// Rotation-parameterized bijection on 12-bit nibble triples:
//
//   (a, b, c) -> (b, c, (a + c + 8 + R) mod 16)
//
// Both directions are materialized as 4096-entry tables indexed by the packed
// triple. Rotation only moves the z-output layer.
class SBox3D {
 public:
  /// Throws RangeError unless 0 <= rotation <= 15.
  static SBox3D build(int rotation);

  int rotation() const noexcept { return rotation_; }

  NibbleTriple substitute(NibbleTriple t) const noexcept {
    return NibbleTriple::unpack(forward_[t.packed()]);
  }
  NibbleTriple invert(NibbleTriple t) const noexcept {
    return NibbleTriple::unpack(inverse_[t.packed()]);
  }

  std::uint16_t substitute_packed(std::uint16_t t) const noexcept { return forward_[t]; }
  std::uint16_t invert_packed(std::uint16_t t) const noexcept { return inverse_[t]; }

  /// `count` unit rotations, each one rewriting every forward and inverse
  /// entry, so cost is linear in count.
  SBox3D rotated(unsigned count) const;
  void rotate_in_place(unsigned count) noexcept;

  std::span<const std::uint16_t, kSboxEntries> forward_table() const noexcept { return forward_; }
  std::span<const std::uint16_t, kSboxEntries> inverse_table() const noexcept { return inverse_; }

  friend bool operator==(const SBox3D &, const SBox3D &) = default;

 private:
  SBox3D() = default;
  void rotate_once() noexcept;

  int rotation_ = 0;
  std::array<std::uint16_t, kSboxEntries> forward_{};
  std::array<std::uint16_t, kSboxEntries> inverse_{};
};

inline SBox3D build_sbox(int rotation) { return SBox3D::build(rotation); }
inline SBox3D rotate(const SBox3D &box, unsigned count) { return box.rotated(count); }

// SubBytes over the 62 nibble triples of a 93-byte state. Nibbles are read
// high-first, triples left to right. Throws LengthError on other sizes.
void sub_state(const SBox3D &box, std::span<std::uint8_t> state);
void inv_sub_state(const SBox3D &box, std::span<std::uint8_t> state);

/// 4096 lines `S[a][b][c] = Y1Y2Y3`, all hex digits uppercase.
std::string dump_sbox(const SBox3D &box);

}  // namespace p3dk
