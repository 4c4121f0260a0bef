// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace p3dk {

inline constexpr std::size_t kPlainBlockBytes = 31;
inline constexpr std::size_t kStateBytes = 93;

using Block31 = std::array<std::uint8_t, kPlainBlockBytes>;
using Block93 = std::array<std::uint8_t, kStateBytes>;

// Symbol alphabet: the 81 printable codes '*' (42) .. 'z' (122).
inline constexpr std::uint8_t kAlphabetOrigin = 42;
inline constexpr int kCubeSide = 9;

struct SymbolPair {
  char first;
  char second;

  friend bool operator==(const SymbolPair &, const SymbolPair &) = default;
};

// 9x9x9 symbol cube. cell(x, y, z) = (42 + 9x + y, 42 + 9y + z).
class CubeMatrix {
 public:
  CubeMatrix() = default;

  const SymbolPair &cell(int x, int y, int z) const { return cells_[index(x, y, z)]; }
  SymbolPair &cell(int x, int y, int z) { return cells_[index(x, y, z)]; }

  friend bool operator==(const CubeMatrix &, const CubeMatrix &) = default;

 private:
  static std::size_t index(int x, int y, int z);

  std::array<SymbolPair, kCubeSide * kCubeSide * kCubeSide> cells_{};
};

CubeMatrix build_cube();

/// One record per cell, x-major then y then z: `arr[x][y][z] = <pair>`.
std::string dump_cube(const CubeMatrix &cube);

/// Inverse of dump_cube. Throws FormatError on malformed records, missing
/// cells, or duplicates.
CubeMatrix parse_cube_dump(std::string_view text);

// (row digit, column digit, depth symbol) for one byte.
struct SymbolTriple {
  char row_digit;
  char col_digit;
  char depth_symbol;

  friend bool operator==(const SymbolTriple &, const SymbolTriple &) = default;
};

/// Encodes any byte value at block position p. For bytes in the printable
/// alphabet the depth symbol is 42 + 9y + (p mod 9); bytes outside it fold
/// their 81-wide quotient q into the depth, z = (p + q) mod 9.
SymbolTriple encode_byte(std::uint8_t b, std::size_t p) noexcept;

/// Inverse of encode_byte at the same position.
/// Throws IntegrityError when the column digit disagrees with the depth
/// symbol (or a symbol is outside its alphabet) and RangeError (as
/// DepthRangeError) when the depth implies q > 3.
std::uint8_t decode_triple(const SymbolTriple &t, std::size_t p);

/// 31 bytes -> 31 triples laid out as 93 bytes (row, col, depth per byte).
Block93 encode_block(std::span<const std::uint8_t> in);
/// Errors carry the index of the offending triple.
Block31 decode_block(std::span<const std::uint8_t> in);

}  // namespace p3dk
