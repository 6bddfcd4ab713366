"""Adversarial instance generators built from bit strings.

``s_transform`` follows every bit with ``d+1`` ones, so no cheap alignment can
shift bits against each other and the edit distance of two transforms equals
the Hamming distance of the sources (for Hamming distance up to ``d+1``).
``t_transform`` buries a string between two long all-ones pads.
"""
from __future__ import annotations

import random

from .core import InvalidParams, as_bytes

ZERO = ord("0")
ONE = ord("1")


def _bits(x) -> bytes:
    b = as_bytes(x)
    if any(c not in (ZERO, ONE) for c in b):
        raise InvalidParams("bit strings may only contain '0' and '1'")
    return b


def s_transform(x, d: int) -> bytes:
    """Each bit of ``x`` followed by ``d+1`` ones; length ``len(x) * (d+2)``."""
    if d < 0:
        raise InvalidParams(f"d must be >= 0, got {d}")
    pad = bytes([ONE]) * (d + 1)
    return b"".join(bytes([c]) + pad for c in _bits(x))


def pad_lengths(d: int, n: int) -> tuple[int, int]:
    """Left and right pad for :func:`t_transform`; an odd total puts the extra one on the right."""
    total = (d + 1) * n
    return total // 2, total - total // 2


def t_transform(x, d: int, n: int) -> bytes:
    if d < 0 or n < 0:
        raise InvalidParams(f"d and n must be >= 0, got d={d}, n={n}")
    left, right = pad_lengths(d, n)
    return bytes([ONE]) * left + as_bytes(x) + bytes([ONE]) * right


def sample_ham_pair(n: int, d: int, seed) -> tuple[bytes, bytes]:
    """Random ``x`` of weight ``d`` and a ``y`` at Hamming distance ``d`` or ``d+1``.

    Deterministic for a given seed.
    """
    if d < 0 or d + 1 > n:
        raise InvalidParams(f"need 0 <= d and d + 1 <= n, got n={n}, d={d}")
    rng = random.Random(seed)
    x = bytearray([ZERO]) * n
    for i in rng.sample(range(n), d):
        x[i] = ONE
    h = d + rng.randrange(2)
    y = bytearray(x)
    for i in rng.sample(range(n), h):
        y[i] ^= ZERO ^ ONE
    return bytes(x), bytes(y)
