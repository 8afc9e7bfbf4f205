#!/usr/bin/env python3
"""Writes reference FEC vectors computed with plain integer arithmetic.

Hamming(15,11): codeword bits are m(x) x^4 + (m(x) x^4 mod x^4+x+1), most
significant bit = highest degree. RS(31,26) over GF(32) mod x^5+x^2+1 with
generator roots alpha^1..alpha^5, symbols highest degree first.

Usage: gen_fec_vectors.py OUT_PATH [SEED]
"""

import random
import sys

GF_POLY = 0b100101
HAMMING_G = 0b10011


def clmod(a: int, g: int) -> int:
    dg = g.bit_length() - 1
    while a.bit_length() - 1 >= dg:
        a ^= g << (a.bit_length() - 1 - dg)
    return a


def gf_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b100000:
            a ^= GF_POLY
    return r


def gf_pow(a: int, e: int) -> int:
    r = 1
    for _ in range(e):
        r = gf_mul(r, a)
    return r


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] ^= gf_mul(a, b)
    return out


def rs_generator():
    g = [1]
    for i in range(1, 6):
        g = poly_mul(g, [1, gf_pow(2, i)])  # (x - a^i) == (x + a^i)
    return g


def rs_encode(msg, g):
    rem = list(msg) + [0] * 5
    for i in range(len(msg)):
        coef = rem[i]
        if coef:
            for j, gj in enumerate(g):
                rem[i + j] ^= gf_mul(coef, gj)
    return list(msg) + rem[-5:]


def hamming_encode(m: int) -> int:
    shifted = m << 4
    return shifted | clmod(shifted, HAMMING_G)


def main() -> None:
    out_path = sys.argv[1]
    rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 20240611)
    g = rs_generator()
    lines = ["# kind fields... (hex)", "rsgen " + " ".join(f"{c:02x}" for c in g)]
    for m in [0, 1, 0x400, 0x7FF, 0x555, 0x2AA] + [rng.randrange(1 << 11) for _ in range(58)]:
        lines.append(f"hamming {m:03x} {hamming_encode(m):04x}")
    msgs = [[0] * 26, [31] * 26, [1] + [0] * 25, [0] * 25 + [1]]
    msgs += [[rng.randrange(32) for _ in range(26)] for _ in range(60)]
    for msg in msgs:
        cw = rs_encode(msg, g)
        lines.append("rs " + "".join(f"{s:02x}" for s in msg) + " " + "".join(f"{s:02x}" for s in cw))
    with open(out_path, "w", encoding="ascii") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
