// SPDX-License-Identifier: MIT

#include <gtest/gtest.h>

#include <bitset>
#include <random>
#include <string>

#include "p3dk/error.hpp"
#include "p3dk/sbox3d.hpp"
#include "test_util.hpp"

using namespace p3dk;

TEST(SBox3D, ConstructorExamples) {
  EXPECT_EQ(build_sbox(0).substitute({0, 0, 0}), (NibbleTriple{0, 0, 8}));
  EXPECT_EQ(build_sbox(8).substitute({0, 0, 0}), (NibbleTriple{0, 0, 0}));
  EXPECT_EQ(build_sbox(0).substitute({0xA, 0xB, 0xC}), (NibbleTriple{0xB, 0xC, 0xE}));
  EXPECT_EQ(build_sbox(0).substitute({0, 0, 8}), (NibbleTriple{0, 8, 0}));
  EXPECT_EQ(build_sbox(0).invert({0xB, 0xC, 0xE}), (NibbleTriple{0xA, 0xB, 0xC}));
  EXPECT_EQ(build_sbox(8).invert({0, 0, 0}), (NibbleTriple{0, 0, 0}));
}

TEST(SBox3D, RotationDomain) {
  EXPECT_THROW(build_sbox(16), RangeError);
  EXPECT_THROW(build_sbox(-1), RangeError);
  EXPECT_NO_THROW(build_sbox(15));
}

// Brute-force oracle: every output seen exactly once, and the formula holds
// entry by entry.
TEST(SBox3DProperty, PermutationForEveryRotation) {
  for (int r = 0; r < 16; ++r) {
    const SBox3D box = build_sbox(r);
    std::bitset<4096> seen;
    for (unsigned a = 0; a < 16; ++a) {
      for (unsigned b = 0; b < 16; ++b) {
        for (unsigned c = 0; c < 16; ++c) {
          const NibbleTriple in{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                static_cast<std::uint8_t>(c)};
          const NibbleTriple out = box.substitute(in);
          ASSERT_EQ(out.a, b);
          ASSERT_EQ(out.b, c);
          ASSERT_EQ(out.c, (a + c + 8 + static_cast<unsigned>(r)) % 16);
          ASSERT_FALSE(seen[out.packed()]);
          seen.set(out.packed());
          ASSERT_EQ(box.invert(out), in);
        }
      }
    }
    ASSERT_TRUE(seen.all());
  }
}

TEST(SBox3DProperty, RotationMatchesRebuild) {
  for (int r1 = 0; r1 < 16; ++r1) {
    const SBox3D base = build_sbox(r1);
    for (unsigned n = 0; n <= 16; ++n) {
      ASSERT_EQ(rotate(base, n), build_sbox(static_cast<int>((r1 + n) % 16))) << r1 << "+" << n;
    }
  }
  const SBox3D box = build_sbox(5);
  EXPECT_EQ(rotate(box, 0), box);
  EXPECT_EQ(rotate(box, 16), box);
  EXPECT_EQ(rotate(build_sbox(0), 2), build_sbox(2));
}

TEST(SubState, AllZeroState) {
  Block93 s{};
  sub_state(build_sbox(8), s);
  EXPECT_EQ(s, Block93{});

  sub_state(build_sbox(0), s);
  // Nibble stream 0,0,8 repeated: bytes 00 80 08 per 3-byte group.
  for (std::size_t i = 0; i < 93; i += 3) {
    EXPECT_EQ(s[i], 0x00);
    EXPECT_EQ(s[i + 1], 0x80);
    EXPECT_EQ(s[i + 2], 0x08);
  }
}

TEST(SubState, NibbleOrderIsHighFirst) {
  // Triple 0 = nibbles (1, 2, 3) from bytes 0x12 0x3_.
  Block93 s{};
  s[0] = 0x12;
  s[1] = 0x30;
  sub_state(build_sbox(0), s);
  // (1,2,3) -> (2, 3, (1 + 3 + 8) mod 16 = 12); triple 1 = (0,0,0) -> (0,0,8).
  EXPECT_EQ(s[0], 0x23);
  EXPECT_EQ(s[1], 0xC0);
  EXPECT_EQ(s[2], 0x08);
}

TEST(SubState, WrongLength) {
  std::vector<std::uint8_t> s(92);
  EXPECT_THROW(sub_state(build_sbox(0), s), LengthError);
  EXPECT_THROW(inv_sub_state(build_sbox(0), s), LengthError);
}

TEST(SubStateProperty, RoundTrip) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 10000; ++i) {
    const SBox3D box = build_sbox(static_cast<int>(gen() % 16));
    const Block93 orig = p3dk::testing::random_array<Block93>(gen);
    Block93 s = orig;
    sub_state(box, s);
    inv_sub_state(box, s);
    ASSERT_EQ(s, orig);
  }
}

TEST(DumpSbox, Format) {
  const std::string text = dump_sbox(build_sbox(0));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4096);
  EXPECT_EQ(text.substr(0, 17), "S[0][0][0] = 008\n");
  EXPECT_NE(text.find("S[A][B][C] = BCE\n"), std::string::npos);
  EXPECT_NE(dump_sbox(build_sbox(2)).find("S[A][B][C] = BC0\n"), std::string::npos);
}
