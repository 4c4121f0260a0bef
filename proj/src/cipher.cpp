// SPDX-License-Identifier: MIT

#include "p3dk/cipher.hpp"

#include <fstream>
#include <iterator>
#include <vector>

#include "p3dk/error.hpp"
#include "p3dk/keyed_rng.hpp"

namespace p3dk {

namespace {

constexpr std::uint8_t kPadMask = 0x1F;  // low 5 bits of the last byte

}  // namespace

MasterKey MasterKey::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kPlainBlockBytes) {
    throw KeyFormatError("key must be exactly 31 bytes, got " + std::to_string(bytes.size()));
  }
  if ((bytes[kPlainBlockBytes - 1] & kPadMask) != 0) {
    throw KeyFormatError("key padding bits (243..247) must be zero");
  }
  Block31 b{};
  std::copy(bytes.begin(), bytes.end(), b.begin());
  return MasterKey(b);
}

MasterKey load_key_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open key file " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("failed reading key file " + path.string());
  }
  return MasterKey::from_bytes(bytes);
}

Block93 rotl_bits(const Block93 &in, std::size_t n) noexcept {
  n %= kStateBits;
  const std::size_t byte_shift = n / 8;
  const unsigned bit_shift = static_cast<unsigned>(n % 8);
  Block93 out{};
  for (std::size_t i = 0; i < kStateBytes; ++i) {
    const std::uint8_t hi = in[(i + byte_shift) % kStateBytes];
    if (bit_shift == 0) {
      out[i] = hi;
    } else {
      const std::uint8_t lo = in[(i + byte_shift + 1) % kStateBytes];
      out[i] = static_cast<std::uint8_t>((hi << bit_shift) | (lo >> (8 - bit_shift)));
    }
  }
  return out;
}

ExpandedKey expand_key_with(const MasterKey &key, unsigned key_rotation, int sbox_rotation) {
  if (key_rotation >= kStateBits) {
    throw RangeError("key rotation must lie in [0, 743]");
  }
  ExpandedKey ek{
      .k93 = rotl_bits(encode_block(key.bytes()), key_rotation),
      .key_rotation = key_rotation,
      .sbox_rotation = sbox_rotation,
      .round_keys = {},
      .sbox = SBox3D::build(sbox_rotation),
  };
  for (int r = 0; r <= kRounds; ++r) {
    ek.round_keys[static_cast<std::size_t>(r)] =
        rotl_bits(ek.k93, (kRoundKeyStride * static_cast<std::size_t>(r)) % kStateBits);
  }
  return ek;
}

ExpandedKey expand_key(const MasterKey &key) {
  KeyedRng rng = KeyedRng::seed_from_bytes(key.bytes());
  const auto rho = static_cast<unsigned>(rng.next_below(kStateBits));
  const auto rotation = static_cast<int>(rng.next_below(kSboxRotations));
  return expand_key_with(key, rho, rotation);
}

Block31 pad_block(std::span<const std::uint8_t> bits, std::size_t bit_len) {
  if (bit_len > kBlockBits) {
    throw LengthError("pad_block accepts at most 243 bits, got " + std::to_string(bit_len));
  }
  const std::size_t needed = (bit_len + 7) / 8;
  if (bits.size() < needed) {
    throw LengthError("pad_block: buffer shorter than the declared bit length");
  }
  Block31 out{};
  std::copy_n(bits.begin(), needed, out.begin());
  if (bit_len % 8 != 0) {
    out[needed - 1] &= static_cast<std::uint8_t>(0xFF << (8 - bit_len % 8));
  }
  return out;
}

void shift_rows(State93 &s) noexcept {
  for (std::size_t r = 1; r < kStateRows; ++r) {
    std::array<std::uint8_t, kStateCols> row{};
    for (std::size_t j = 0; j < kStateCols; ++j) row[j] = s.at(r, (j + r) % kStateCols);
    for (std::size_t j = 0; j < kStateCols; ++j) s.at(r, j) = row[j];
  }
}

void inv_shift_rows(State93 &s) noexcept {
  for (std::size_t r = 1; r < kStateRows; ++r) {
    std::array<std::uint8_t, kStateCols> row{};
    for (std::size_t j = 0; j < kStateCols; ++j) row[j] = s.at(r, (j + kStateCols - r) % kStateCols);
    for (std::size_t j = 0; j < kStateCols; ++j) s.at(r, j) = row[j];
  }
}

void mix_columns(State93 &s) noexcept {
  for (std::size_t j = 0; j < kStateCols; ++j) {
    const std::uint8_t u = s.at(0, j), v = s.at(1, j), w = s.at(2, j);
    s.at(0, j) = u ^ v;
    s.at(1, j) = v ^ w;
    s.at(2, j) = u ^ v ^ w;
  }
}

void inv_mix_columns(State93 &s) noexcept {
  for (std::size_t j = 0; j < kStateCols; ++j) {
    const std::uint8_t o1 = s.at(0, j), o2 = s.at(1, j), o3 = s.at(2, j);
    s.at(0, j) = o2 ^ o3;
    s.at(1, j) = o1 ^ o2 ^ o3;
    s.at(2, j) = o1 ^ o3;
  }
}

Block93 encrypt_block(std::span<const std::uint8_t> p31, const ExpandedKey &ek, RoundOptions options) {
  State93 state(encode_block(p31));
  state ^= ek.round_keys[0];
  for (int r = 1; r <= kRounds; ++r) {
    sub_state(ek.sbox, state.bytes());
    shift_rows(state);
    if (options.mix_columns && r % 2 == 0) {
      mix_columns(state);
    }
    state ^= ek.round_keys[static_cast<std::size_t>(r)];
  }
  return state.block();
}

Block31 decrypt_block(std::span<const std::uint8_t> c93, const ExpandedKey &ek) {
  if (c93.size() != kStateBytes) {
    throw LengthError("decrypt_block expects 93 bytes, got " + std::to_string(c93.size()));
  }
  Block93 raw{};
  std::copy(c93.begin(), c93.end(), raw.begin());
  State93 state(raw);
  for (int r = kRounds; r >= 1; --r) {
    state ^= ek.round_keys[static_cast<std::size_t>(r)];
    if (r % 2 == 0) {
      inv_mix_columns(state);
    }
    inv_shift_rows(state);
    inv_sub_state(ek.sbox, state.bytes());
  }
  state ^= ek.round_keys[0];
  return decode_block(state.bytes());
}

}  // namespace p3dk
