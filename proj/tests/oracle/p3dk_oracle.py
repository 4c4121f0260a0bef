#!/usr/bin/env python3
# SPDX-License-Identifier: MIT
"""Step-by-step reference model used to freeze the C++ test vectors.

Every layer is written out directly from its defining formula, using Python
integers and bit strings instead of the table/byte tricks the C++ library
uses. Run without arguments to print all frozen vectors.
"""

import sys

MASK64 = (1 << 64) - 1
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x00000100000001B3
STATE_BITS = 744


def fnv1a(data):
    s = FNV_OFFSET
    for b in data:
        s = ((s ^ b) * FNV_PRIME) % (1 << 64)
    return s if s != 0 else FNV_OFFSET


class Xorshift:
    def __init__(self, s):
        self.s = s

    def next_u64(self):
        s = self.s
        s = (s ^ (s << 13)) & MASK64
        s = (s ^ (s >> 7)) & MASK64
        s = (s ^ (s << 17)) & MASK64
        self.s = s
        return s

    def next_below(self, n):
        return self.next_u64() % n


def encode_byte(b, p):
    v = (b - 42) % 256
    i, q = v % 81, v // 81
    x, y = i // 9, i % 9
    z = (p + q) % 9
    return [ord(str(x)), ord(str(y)), 42 + 9 * y + z]


def decode_triple(t, p):
    x, y = int(chr(t[0])), int(chr(t[1]))
    m = t[2] - 42
    assert m // 9 == y, "integrity"
    q = (m % 9 - p) % 9
    assert q <= 3, "range"
    return (81 * q + 9 * x + y + 42) % 256


def encode_block(b31):
    out = []
    for p, b in enumerate(b31):
        out += encode_byte(b, p)
    return out


def decode_block(b93):
    return [decode_triple(b93[3 * p:3 * p + 3], p) for p in range(31)]


def to_bits(data):
    return "".join(format(b, "08b") for b in data)


def from_bits(bits):
    return [int(bits[i:i + 8], 2) for i in range(0, len(bits), 8)]


def rotl_bits(data, n):
    bits = to_bits(data)
    n %= len(bits)
    return from_bits(bits[n:] + bits[:n])


def sbox_forward(a, b, c, r):
    return b, c, (a + c + 8 + r) % 16


def sbox_inverse(y1, y2, y3, r):
    return (y3 - y2 - 8 - r) % 16, y1, y2


def nibbles(state):
    out = []
    for byte in state:
        out += [byte >> 4, byte & 0xF]
    return out


def from_nibbles(ns):
    return [(ns[2 * k] << 4) | ns[2 * k + 1] for k in range(len(ns) // 2)]


def sub_state(state, r, inverse=False):
    ns = nibbles(state)
    out = []
    for t in range(62):
        a, b, c = ns[3 * t:3 * t + 3]
        out += list(sbox_inverse(a, b, c, r) if inverse else sbox_forward(a, b, c, r))
    return from_nibbles(out)


def grid(state):
    return [state[31 * r:31 * r + 31] for r in range(3)]


def flat(g):
    return g[0] + g[1] + g[2]


def shift_rows(state, inverse=False):
    g = grid(state)
    sign = -1 if inverse else 1
    return flat([[g[r][(j + sign * r) % 31] for j in range(31)] for r in range(3)])


def mix_columns(state, inverse=False):
    g = grid(state)
    out = [[0] * 31 for _ in range(3)]
    for j in range(31):
        u, v, w = g[0][j], g[1][j], g[2][j]
        if inverse:
            col = (v ^ w, u ^ v ^ w, u ^ w)
        else:
            col = (u ^ v, v ^ w, u ^ v ^ w)
        for r in range(3):
            out[r][j] = col[r]
    return flat(out)


def xor(a, b):
    return [x ^ y for x, y in zip(a, b)]


def expand_key(mk31):
    rng = Xorshift(fnv1a(mk31))
    rho = rng.next_below(744)
    rot = rng.next_below(16)
    k93 = rotl_bits(encode_block(mk31), rho)
    round_keys = [rotl_bits(k93, (47 * r) % 744) for r in range(17)]
    return rho, rot, round_keys


def encrypt_block(p31, mk31, mix=True):
    _, rot, rk = expand_key(mk31)
    state = xor(encode_block(p31), rk[0])
    for r in range(1, 17):
        state = sub_state(state, rot)
        state = shift_rows(state)
        if mix and r % 2 == 0:
            state = mix_columns(state)
        state = xor(state, rk[r])
    return state


def decrypt_block(c93, mk31):
    _, rot, rk = expand_key(mk31)
    state = list(c93)
    for r in range(16, 0, -1):
        state = xor(state, rk[r])
        if r % 2 == 0:
            state = mix_columns(state, inverse=True)
        state = shift_rows(state, inverse=True)
        state = sub_state(state, rot, inverse=True)
    return decode_block(xor(state, rk[0]))


def hexs(data):
    return "".join(format(b, "02x") for b in data)


KAT_INPUTS = [
    # '*' key with the five padding bits cleared, all-zero plaintext.
    ([0x2A] * 30 + [0x20], [0x00] * 31),
    # Counting key and plaintext.
    ([i * 7 & 0xFF for i in range(30)] + [0xE0],
     [(0xF0 - 3 * i) & 0xFF for i in range(30)] + [0xA0]),
]


def main():
    print("fnv1a([00])       = 0x%016X" % fnv1a([0x00]))
    print("fnv1a('a')        = 0x%016X" % fnv1a([0x61]))
    rng = Xorshift(1)
    chain = [rng.next_u64() for _ in range(3)]
    print("xorshift(1) chain = " + ", ".join("0x%016X" % v for v in chain))
    print("encode_block(31*'*') = " + bytes(encode_block([0x2A] * 31)).decode())
    for key, pt in KAT_INPUTS:
        rho, rot, _ = expand_key(key)
        ct = encrypt_block(pt, key)
        assert decrypt_block(ct, key) == pt
        ct_nomix = encrypt_block(pt, key, mix=False)
        print("KAT key=%s" % hexs(key))
        print("    pt =%s" % hexs(pt))
        print("    rho=%d R=%d" % (rho, rot))
        print("    ct =%s" % hexs(ct))
        print("    ct_nomix_differs=%s" % (ct != ct_nomix))
    return 0


if __name__ == "__main__":
    sys.exit(main())
