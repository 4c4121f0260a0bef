// SPDX-License-Identifier: MIT

#include "p3dk/container.hpp"

#include <algorithm>

#include "p3dk/error.hpp"

namespace p3dk {

namespace {

// Copies `count` (<= 243) bits starting at `bit_offset` into a zeroed block.
Block31 extract_bits(std::span<const std::uint8_t> src, std::uint64_t bit_offset, std::size_t count) {
  Block31 out{};
  const std::size_t first = static_cast<std::size_t>(bit_offset / 8);
  const unsigned shift = static_cast<unsigned>(bit_offset % 8);
  const std::size_t out_bytes = (count + 7) / 8;
  for (std::size_t k = 0; k < out_bytes; ++k) {
    const std::size_t i = first + k;
    const unsigned hi = i < src.size() ? src[i] : 0u;
    const unsigned lo = (shift != 0 && i + 1 < src.size()) ? src[i + 1] : 0u;
    out[k] = static_cast<std::uint8_t>(shift == 0 ? hi : ((hi << shift) | (lo >> (8 - shift))));
  }
  if (count % 8 != 0) {
    out[out_bytes - 1] &= static_cast<std::uint8_t>(0xFF << (8 - count % 8));
  }
  return out;
}

// ORs the first `count` bits of `block` into `dst` at `bit_offset`.
void deposit_bits(std::span<std::uint8_t> dst, std::uint64_t bit_offset, const Block31 &block,
                  std::size_t count) {
  const std::size_t first = static_cast<std::size_t>(bit_offset / 8);
  const unsigned shift = static_cast<unsigned>(bit_offset % 8);
  const std::size_t in_bytes = (count + 7) / 8;
  for (std::size_t k = 0; k < in_bytes; ++k) {
    std::uint8_t v = block[k];
    if (k + 1 == in_bytes && count % 8 != 0) {
      v &= static_cast<std::uint8_t>(0xFF << (8 - count % 8));
    }
    const std::size_t i = first + k;
    if (i < dst.size()) dst[i] |= static_cast<std::uint8_t>(v >> shift);
    if (shift != 0 && i + 1 < dst.size()) dst[i + 1] |= static_cast<std::uint8_t>(v << (8 - shift));
  }
}

bool tail_is_zero(const Block31 &block, std::size_t used_bits) {
  for (std::size_t bit = used_bits; bit < kPaddedBlockBits; ++bit) {
    if ((block[bit / 8] >> (7 - bit % 8)) & 1u) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint8_t> CipherContainer::serialize() const {
  std::vector<std::uint8_t> out(kContainerHeaderBytes + blocks.size() * kStateBytes);
  auto it = std::copy(kContainerMagic.begin(), kContainerMagic.end(), out.begin());
  *it++ = kContainerVersion;
  *it++ = 0x00;
  for (int i = 0; i < 8; ++i) {
    *it++ = static_cast<std::uint8_t>(plain_bit_len >> (8 * i));
  }
  for (const Block93 &b : blocks) {
    it = std::copy(b.begin(), b.end(), it);
  }
  return out;
}

CipherContainer CipherContainer::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kContainerHeaderBytes) {
    throw FormatError("container shorter than its 14-byte header");
  }
  if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin())) {
    throw FormatError("bad container magic");
  }
  if (bytes[4] != kContainerVersion) {
    throw FormatError("unsupported container version " + std::to_string(bytes[4]));
  }
  if (bytes[5] != 0x00) {
    throw FormatError("unsupported container flags");
  }
  CipherContainer c;
  for (int i = 0; i < 8; ++i) {
    c.plain_bit_len |= static_cast<std::uint64_t>(bytes[6 + static_cast<std::size_t>(i)]) << (8 * i);
  }
  const std::size_t payload = bytes.size() - kContainerHeaderBytes;
  if (payload % kStateBytes != 0) {
    throw LengthError("container payload is not a whole number of 93-byte blocks");
  }
  if (payload / kStateBytes != blocks_for_bits(c.plain_bit_len)) {
    throw LengthError("container holds " + std::to_string(payload / kStateBytes) +
                      " blocks, header implies " + std::to_string(blocks_for_bits(c.plain_bit_len)));
  }
  c.blocks.resize(payload / kStateBytes);
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const auto src = bytes.subspan(kContainerHeaderBytes + b * kStateBytes, kStateBytes);
    std::copy(src.begin(), src.end(), c.blocks[b].begin());
  }
  return c;
}

CipherContainer encrypt_stream(std::span<const std::uint8_t> plaintext, const ExpandedKey &ek) {
  CipherContainer c;
  c.plain_bit_len = static_cast<std::uint64_t>(plaintext.size()) * 8;
  const std::uint64_t n = blocks_for_bits(c.plain_bit_len);
  c.blocks.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t b = 0; b < n; ++b) {
    const std::uint64_t offset = b * kBlockBits;
    const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kBlockBits, c.plain_bit_len - offset));
    c.blocks.push_back(encrypt_block(extract_bits(plaintext, offset, count), ek));
  }
  return c;
}

CipherContainer encrypt_stream(std::span<const std::uint8_t> plaintext, const MasterKey &key) {
  return encrypt_stream(plaintext, expand_key(key));
}

std::vector<std::uint8_t> decrypt_stream(const CipherContainer &container, const ExpandedKey &ek) {
  if (container.plain_bit_len % 8 != 0) {
    throw FormatError("container bit length is not a whole number of bytes");
  }
  if (container.blocks.size() != blocks_for_bits(container.plain_bit_len)) {
    throw LengthError("block count does not match the recorded bit length");
  }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(container.plain_bit_len / 8), 0);
  for (std::size_t b = 0; b < container.blocks.size(); ++b) {
    const std::uint64_t offset = static_cast<std::uint64_t>(b) * kBlockBits;
    const auto count =
        static_cast<std::size_t>(std::min<std::uint64_t>(kBlockBits, container.plain_bit_len - offset));
    const Block31 plain = decrypt_block(container.blocks[b], ek);
    if (!tail_is_zero(plain, count)) {
      throw IntegrityError("nonzero padding bits in block " + std::to_string(b));
    }
    deposit_bits(out, offset, plain, count);
  }
  return out;
}

std::vector<std::uint8_t> decrypt_stream(const CipherContainer &container, const MasterKey &key) {
  return decrypt_stream(container, expand_key(key));
}

}  // namespace p3dk
