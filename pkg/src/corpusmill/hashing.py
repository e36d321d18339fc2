"""Stable 64-bit hashing used across sharding, checksums and MinHash.

Everything downstream (shard assignment, segment checksums, MinHash
signatures) must be reproducible across runs, platforms and Python
versions, so the builtin ``hash()`` is never used. FNV-1a is the
documented base hash; MinHash derives its per-component hash family from
it with seeded affine mixing over a Mersenne prime.
"""

from __future__ import annotations

import random

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF

# Mersenne prime 2^61 - 1: multiplication stays in native int range while
# still covering the useful part of the 64-bit hash space.
MERSENNE61 = (1 << 61) - 1


def fnv1a_64(data: bytes | str) -> int:
    """FNV-1a over bytes (strings are UTF-8 encoded first)."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    h = FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & _MASK64
    return h


def fnv1a_hex(data: bytes | str) -> str:
    """16-hex-digit rendering of :func:`fnv1a_64`, used for checksums."""
    return f"{fnv1a_64(data):016x}"


def hash_family(count: int, seed: int) -> list[tuple[int, int]]:
    """(a, b) parameters for ``count`` affine hashes h(x) = (a*x + b) % M61.

    The parameters are drawn from ``random.Random(seed)``, which is stable
    across platforms, so a (count, seed) pair always denotes the same
    family.
    """
    rng = random.Random(seed)
    params = []
    for _ in range(count):
        a = rng.randrange(1, MERSENNE61)
        b = rng.randrange(0, MERSENNE61)
        params.append((a, b))
    return params


def affine_hash(value: int, a: int, b: int) -> int:
    return (a * value + b) % MERSENNE61
