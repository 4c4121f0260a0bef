// SPDX-License-Identifier: MIT

#include "p3dk/sbox3d.hpp"

#include <algorithm>

#include "p3dk/error.hpp"

namespace p3dk {

SBox3D SBox3D::build(int rotation) {
  if (rotation < 0 || rotation >= kSboxRotations) {
    throw RangeError("S-box rotation must lie in [0, 15], got " + std::to_string(rotation));
  }
  SBox3D box;
  box.rotation_ = rotation;
  // Both tables are filled in index order. Forward: (a,b,c) -> (b, c, a+c+8+R).
  // Inverse: (x,y,z) -> (z-y-8-R, x, y), all mod 16.
  const unsigned r = static_cast<unsigned>(rotation);
  for (unsigned t = 0; t < kSboxEntries; ++t) {
    const unsigned hi = t >> 8, mid = (t >> 4) & 0xF, lo = t & 0xF;
    box.forward_[t] = static_cast<std::uint16_t>((t & 0xFF) << 4 | ((hi + lo + kSboxDepthOffset + r) & 0xF));
    box.inverse_[t] = static_cast<std::uint16_t>(((lo - mid - kSboxDepthOffset - r) & 0xF) << 8 | t >> 4);
  }
  return box;
}

void SBox3D::rotate_once() noexcept {
  for (std::uint16_t &y : forward_) {
    y = static_cast<std::uint16_t>((y & 0xFF0) | ((y + 1) & 0xF));
  }
  // Output (y1, y2, y3) now lives at (y1, y2, y3 + 1): shift each 16-entry
  // z-row of the inverse table right by one.
  for (std::size_t row = 0; row < kSboxEntries; row += 16) {
    const auto first = inverse_.begin() + static_cast<std::ptrdiff_t>(row);
    std::rotate(first, first + 15, first + 16);
  }
  rotation_ = (rotation_ + 1) % kSboxRotations;
}

void SBox3D::rotate_in_place(unsigned count) noexcept {
  for (unsigned i = 0; i < count; ++i) {
    rotate_once();
  }
}

SBox3D SBox3D::rotated(unsigned count) const {
  SBox3D copy = *this;
  copy.rotate_in_place(count);
  return copy;
}

namespace {

// Every 3 bytes hold exactly two triples: (b0, b1.hi) and (b1.lo, b2).
template <typename Lookup>
void apply_triples(std::span<std::uint8_t> state, Lookup lookup) {
  if (state.size() != kStateBytes) {
    throw LengthError("S-box layer expects a 93-byte state, got " + std::to_string(state.size()));
  }
  for (std::size_t i = 0; i < kStateBytes; i += 3) {
    const std::uint16_t t0 = static_cast<std::uint16_t>((state[i] << 4) | (state[i + 1] >> 4));
    const std::uint16_t t1 = static_cast<std::uint16_t>(((state[i + 1] & 0xF) << 8) | state[i + 2]);
    const std::uint16_t s0 = lookup(t0);
    const std::uint16_t s1 = lookup(t1);
    state[i] = static_cast<std::uint8_t>(s0 >> 4);
    state[i + 1] = static_cast<std::uint8_t>(((s0 & 0xF) << 4) | (s1 >> 8));
    state[i + 2] = static_cast<std::uint8_t>(s1 & 0xFF);
  }
}

}  // namespace

void sub_state(const SBox3D &box, std::span<std::uint8_t> state) {
  apply_triples(state, [&box](std::uint16_t t) { return box.substitute_packed(t); });
}

void inv_sub_state(const SBox3D &box, std::span<std::uint8_t> state) {
  apply_triples(state, [&box](std::uint16_t t) { return box.invert_packed(t); });
}

std::string dump_sbox(const SBox3D &box) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(kSboxEntries * 20);
  for (std::uint16_t t = 0; t < kSboxEntries; ++t) {
    const std::uint16_t y = box.substitute_packed(t);
    out += "S[";
    out += kHex[(t >> 8) & 0xF];
    out += "][";
    out += kHex[(t >> 4) & 0xF];
    out += "][";
    out += kHex[t & 0xF];
    out += "] = ";
    out += kHex[(y >> 8) & 0xF];
    out += kHex[(y >> 4) & 0xF];
    out += kHex[y & 0xF];
    out += '\n';
  }
  return out;
}

}  // namespace p3dk
