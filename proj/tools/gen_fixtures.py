#!/usr/bin/env python3
# Copyright 2026 The katan-kit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Bit-list reference model of KATAN/KTANTAN used to generate test vectors.

Written independently of the C++ library (lists of bits, no word tricks) so
the committed fixtures act as an oracle for it. Regenerate with:

    python3 tools/gen_fixtures.py > tests/data/katan_vectors.txt
"""

import random
import sys

ROUNDS = 254

# block_bits: (|L1|, |L2|, x1..x5, y1..y6, steps per round)
PARAMS = {
    32: (13, 19, (12, 7, 8, 5, 3), (18, 7, 12, 10, 8, 3), 1),
    48: (19, 29, (18, 12, 15, 7, 6), (28, 19, 21, 13, 15, 6), 2),
    64: (25, 39, (24, 15, 20, 11, 9), (38, 25, 33, 21, 14, 9), 3),
}

# Published known answers: all-ones key, all-zero plaintext.
ANCHORS = {
    "katan32": 0x7E1FF945,
    "katan48": 0x4B7EFCFB8659,
    "ktantan32": 0x22EA3988,
}


def counter_states():
    """8-bit round counter, x^8+x^7+x^5+x^3+1, seeded with all ones.

    The counter is clocked before each round; IR is the state's MSB.
    """
    state = [1] * 8  # state[i] is bit i
    out = []
    for _ in range(ROUNDS):
        feedback = state[7] ^ state[6] ^ state[4] ^ state[2]
        state = [feedback] + state[:-1]
        out.append(list(state))
    return out


def irregular_bits():
    return [s[7] for s in counter_states()]


def key_bits(key):
    return [(key >> i) & 1 for i in range(80)]


def katan_subkeys(key):
    k = key_bits(key)
    for i in range(80, 2 * ROUNDS):
        k.append(k[i - 80] ^ k[i - 61] ^ k[i - 50] ^ k[i - 13])
    return [(k[2 * r], k[2 * r + 1]) for r in range(ROUNDS)]


def ktantan_subkeys(key):
    k = key_bits(key)
    words = [k[16 * w:16 * w + 16] for w in range(5)]
    pairs = []
    for t in counter_states():
        row = t[4] | (t[5] << 1) | (t[6] << 2) | (t[7] << 3)
        a = [words[w][row] for w in range(5)]
        if not t[3] and not t[2]:
            ka = a[0]
        else:
            ka = [a[1], a[2], a[3], a[4]][t[0] | (t[1] << 1)]
        if not t[3] and t[2]:
            kb = a[4]
        else:
            kb = [a[0], a[1], a[2], a[3]][(1 - t[0]) | ((1 - t[1]) << 1)]
        pairs.append((ka, kb))
    return pairs


def encrypt(block_bits, pt, subkeys):
    len1, len2, x, y, steps = PARAMS[block_bits]
    ir = irregular_bits()
    l2 = [(pt >> j) & 1 for j in range(len2)]
    l1 = [(pt >> (len2 + j)) & 1 for j in range(len1)]
    for r in range(ROUNDS):
        ka, kb = subkeys[r]
        for _ in range(steps):
            fa = l1[x[0]] ^ l1[x[1]] ^ (l1[x[2]] & l1[x[3]]) ^ (l1[x[4]] & ir[r]) ^ ka
            fb = l2[y[0]] ^ l2[y[1]] ^ (l2[y[2]] & l2[y[3]]) ^ (l2[y[4]] & l2[y[5]]) ^ kb
            l1 = [fb] + l1[:-1]
            l2 = [fa] + l2[:-1]
    return sum(b << i for i, b in enumerate(l2 + l1))


def cipher(variant, key, pt):
    family, bits = variant[:-2], int(variant[-2:])
    schedule = katan_subkeys if family == "katan" else ktantan_subkeys
    return encrypt(bits, pt, schedule(key))


def main():
    ones80 = (1 << 80) - 1
    for name, want in ANCHORS.items():
        got = cipher(name, ones80, 0)
        if got != want:
            sys.exit(f"anchor mismatch for {name}: {got:x} != {want:x}")

    rng = random.Random(20181118)
    print("# KATAN/KTANTAN known-answer vectors: variant key plaintext ciphertext")
    print("# hex is the canonical integer, most significant nibble first")
    for variant in ("katan32", "katan48", "katan64",
                    "ktantan32", "ktantan48", "ktantan64"):
        bits = int(variant[-2:])
        ones = (1 << bits) - 1
        cases = [(0, 0), (ones80, ones), (0, ones), (ones80, 0)]
        while len(cases) < 100:
            cases.append((rng.getrandbits(80), rng.getrandbits(bits)))
        for key, pt in cases:
            ct = cipher(variant, key, pt)
            print(f"{variant} {key:020x} {pt:0{bits // 4}x} {ct:0{bits // 4}x}")


if __name__ == "__main__":
    main()
