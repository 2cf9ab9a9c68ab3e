#!/usr/bin/env python3
"""Regenerate the golden fixtures under fixtures/.

This is a from-scratch Python implementation of the input-generation
protocol. It shares no code with the C++ library, so the fixtures it writes
act as an independent oracle for `langbench verify` and the unit tests.
"""

import argparse
import pathlib
import struct

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

FAMILY_CODES = {"sort-crossover": 0, "hybrid-sweep": 1, "dict-ops": 2}


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def next_value_f64(self):
        return 1.0 + ((self.next_u64() >> 11) * 2.0**-53) * 65535.0


def f64_bits(x):
    return struct.unpack("<Q", struct.pack("<d", x))[0]


def mix1(x):
    return SplitMix64(x).next_u64()


def probe_seed(seed, family, size, probe):
    h = mix1(FAMILY_CODES[family])
    h = mix1(h ^ size)
    h = mix1(h ^ probe)
    return seed ^ h


def xor_all(values):
    acc = 0
    for v in values:
        acc ^= v
    return acc


def sort_vector_checksum(g, n):
    return xor_all(f64_bits(g.next_value_f64()) for _ in range(n))


def kv_checksums(g, n):
    keys = [g.next_u64() for _ in range(n)]
    values = [g.next_value_f64() for _ in range(n)]
    return xor_all(keys), xor_all(f64_bits(v) for v in values)


def probe_checksum(seed, family, size, probe):
    g = SplitMix64(probe_seed(seed, family, size, probe))
    if family == "dict-ops":
        k, v = kv_checksums(g, size)
        return k ^ v
    return sort_vector_checksum(g, size)


PROBE_TUPLES = [
    (1, "sort-crossover", 25, 1),
    (1, "sort-crossover", 500, 1),
    (1, "sort-crossover", 1000, 10000),
    (42, "sort-crossover", 975, 3),
    (0, "sort-crossover", 100, 1),
    (1, "hybrid-sweep", 250, 1),
    (1, "hybrid-sweep", 750, 2),
    (7, "hybrid-sweep", 5000, 17),
    (0xDEADBEEF, "hybrid-sweep", 10000, 1),
    (0, "hybrid-sweep", 9750, 100),
    (1, "dict-ops", 100, 1),
    (1, "dict-ops", 1000, 5),
    (7, "dict-ops", 10000, 1),
    (42, "dict-ops", 5000, 9999),
    (MASK, "dict-ops", 200, 2),
    (MASK, "sort-crossover", 50, 7),
    (123456789, "hybrid-sweep", 1000, 42),
    (123456789, "dict-ops", 300, 42),
    (2, "sort-crossover", 1, 1),
    (3, "dict-ops", 1, 1),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    lines = ["seed,index,u64_hex"]
    for seed in (0, 1, 0xDEADBEEF):
        g = SplitMix64(seed)
        for i in range(8):
            lines.append(f"{seed},{i},0x{g.next_u64():016x}")
    (out / "prng_known_answers.csv").write_text("\n".join(lines) + "\n")

    lines = ["kind,seed,n,xor_hex"]
    lines.append(f"sort_vector,42,1000,0x{sort_vector_checksum(SplitMix64(42), 1000):016x}")
    lines.append(f"sort_vector,1,0,0x{0:016x}")
    k, v = kv_checksums(SplitMix64(7), 10000)
    lines.append(f"kv_keys,7,10000,0x{k:016x}")
    lines.append(f"kv_values,7,10000,0x{v:016x}")
    (out / "workload_checksums.csv").write_text("\n".join(lines) + "\n")

    lines = ["seed,family,size,probe,xor_hex"]
    for seed, family, size, probe in PROBE_TUPLES:
        lines.append(f"{seed},{family},{size},{probe},0x{probe_checksum(seed, family, size, probe):016x}")
    (out / "probe_checksums.csv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
