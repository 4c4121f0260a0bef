// SPDX-License-Identifier: MIT

#include "p3dk/keyed_rng.hpp"

#include "p3dk/error.hpp"

namespace p3dk {

KeyedRng KeyedRng::seed_from_bytes(std::span<const std::uint8_t> key_bytes) {
  if (key_bytes.empty()) {
    throw SeedError("cannot seed from empty key material");
  }
  return KeyedRng(fnv1a64(key_bytes));
}

std::uint64_t KeyedRng::next_below(std::uint64_t n) {
  if (n == 0) {
    throw RangeError("next_below: bound must be positive");
  }
  return next_u64() % n;
}

}  // namespace p3dk
