// SPDX-License-Identifier: MIT

#include "p3dk/cube_codec.hpp"

#include <vector>

#include "p3dk/error.hpp"

namespace p3dk {

namespace {

constexpr int kMaxQuotient = 3;
constexpr int kAlphabetSize = kCubeSide * kCubeSide;

char symbol(int offset) { return static_cast<char>(kAlphabetOrigin + offset); }

bool is_digit9(char c) { return c >= '0' && c <= '8'; }

bool in_alphabet(char c) {
  const int code = static_cast<unsigned char>(c);
  return code >= kAlphabetOrigin && code < kAlphabetOrigin + kAlphabetSize;
}

}  // namespace

std::size_t CubeMatrix::index(int x, int y, int z) {
  if (x < 0 || x >= kCubeSide || y < 0 || y >= kCubeSide || z < 0 || z >= kCubeSide) {
    throw RangeError("cube coordinate out of range");
  }
  return static_cast<std::size_t>((x * kCubeSide + y) * kCubeSide + z);
}

CubeMatrix build_cube() {
  CubeMatrix cube;
  for (int x = 0; x < kCubeSide; ++x) {
    for (int y = 0; y < kCubeSide; ++y) {
      for (int z = 0; z < kCubeSide; ++z) {
        cube.cell(x, y, z) = {symbol(kCubeSide * x + y), symbol(kCubeSide * y + z)};
      }
    }
  }
  return cube;
}

std::string dump_cube(const CubeMatrix &cube) {
  std::string out;
  out.reserve(729 * 20);
  for (int x = 0; x < kCubeSide; ++x) {
    for (int y = 0; y < kCubeSide; ++y) {
      for (int z = 0; z < kCubeSide; ++z) {
        const SymbolPair &c = cube.cell(x, y, z);
        out += "arr[";
        out += static_cast<char>('0' + x);
        out += "][";
        out += static_cast<char>('0' + y);
        out += "][";
        out += static_cast<char>('0' + z);
        out += "] = ";
        out += c.first;
        out += c.second;
        out += '\n';
      }
    }
  }
  return out;
}

CubeMatrix parse_cube_dump(std::string_view text) {
  CubeMatrix cube;
  std::vector<bool> seen(729, false);
  std::size_t records = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;

    // arr[x][y][z] = PQ
    if (line.size() != 17 || line.substr(0, 4) != "arr[" || line[5] != ']' ||
        line[6] != '[' || line[8] != ']' || line[9] != '[' || line[11] != ']' ||
        line.substr(12, 3) != " = ") {
      throw FormatError("malformed cube record: " + std::string(line));
    }
    const int x = line[4] - '0';
    const int y = line[7] - '0';
    const int z = line[10] - '0';
    if (!is_digit9(line[4]) || !is_digit9(line[7]) || !is_digit9(line[10])) {
      throw FormatError("cube record index out of range: " + std::string(line));
    }
    const std::size_t flat = static_cast<std::size_t>((x * 9 + y) * 9 + z);
    if (seen[flat]) {
      throw FormatError("duplicate cube record: " + std::string(line));
    }
    seen[flat] = true;
    cube.cell(x, y, z) = {line[15], line[16]};
    ++records;
  }
  if (records != seen.size()) {
    throw FormatError("cube dump has " + std::to_string(records) + " records, expected 729");
  }
  return cube;
}

SymbolTriple encode_byte(std::uint8_t b, std::size_t p) noexcept {
  const int v = (static_cast<int>(b) - kAlphabetOrigin + 256) % 256;
  const int i = v % kAlphabetSize;
  const int q = v / kAlphabetSize;
  const int x = i / kCubeSide;
  const int y = i % kCubeSide;
  const int z = static_cast<int>((p + static_cast<std::size_t>(q)) % kCubeSide);
  return {static_cast<char>('0' + x), static_cast<char>('0' + y),
          symbol(kCubeSide * y + z)};
}

std::uint8_t decode_triple(const SymbolTriple &t, std::size_t p) {
  if (!is_digit9(t.row_digit) || !is_digit9(t.col_digit) || !in_alphabet(t.depth_symbol)) {
    throw IntegrityError("symbol triple outside the cube alphabet");
  }
  const int x = t.row_digit - '0';
  const int y = t.col_digit - '0';
  const int m = static_cast<unsigned char>(t.depth_symbol) - kAlphabetOrigin;
  if (m / kCubeSide != y) {
    throw IntegrityError("depth symbol disagrees with column digit");
  }
  const int z = m % kCubeSide;
  const int q = ((z - static_cast<int>(p % kCubeSide)) % kCubeSide + kCubeSide) % kCubeSide;
  if (q > kMaxQuotient) {
    throw DepthRangeError("depth symbol invalid for this position");
  }
  return static_cast<std::uint8_t>((kAlphabetSize * q + kCubeSide * x + y + kAlphabetOrigin) % 256);
}

Block93 encode_block(std::span<const std::uint8_t> in) {
  if (in.size() != kPlainBlockBytes) {
    throw LengthError("encode_block expects 31 bytes, got " + std::to_string(in.size()));
  }
  Block93 out{};
  for (std::size_t p = 0; p < kPlainBlockBytes; ++p) {
    const SymbolTriple t = encode_byte(in[p], p);
    out[3 * p] = static_cast<std::uint8_t>(t.row_digit);
    out[3 * p + 1] = static_cast<std::uint8_t>(t.col_digit);
    out[3 * p + 2] = static_cast<std::uint8_t>(t.depth_symbol);
  }
  return out;
}

Block31 decode_block(std::span<const std::uint8_t> in) {
  if (in.size() != kStateBytes) {
    throw LengthError("decode_block expects 93 bytes, got " + std::to_string(in.size()));
  }
  Block31 out{};
  for (std::size_t p = 0; p < kPlainBlockBytes; ++p) {
    const SymbolTriple t{static_cast<char>(in[3 * p]), static_cast<char>(in[3 * p + 1]),
                         static_cast<char>(in[3 * p + 2])};
    try {
      out[p] = decode_triple(t, p);
    } catch (const IntegrityError &e) {
      throw IntegrityError(std::string(e.what()) + " at triple " + std::to_string(p), p);
    } catch (const DepthRangeError &e) {
      throw DepthRangeError(std::string(e.what()) + " at triple " + std::to_string(p), p);
    }
  }
  return out;
}

}  // namespace p3dk
