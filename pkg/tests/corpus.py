"""Seeded instance families shared by the acceptance suite."""
from __future__ import annotations

import math
import random

from nearalign.hardgen import s_transform, sample_ham_pair, t_transform

ALPHABETS = (2, 4, 26)


def random_pair(rng: random.Random, n: int, sigma: int) -> tuple[bytes, bytes]:
    s = bytes(97 + rng.randrange(sigma) for _ in range(n))
    t = bytes(97 + rng.randrange(sigma) for _ in range(n))
    return s, t


def mutated_pair(rng: random.Random, n: int, sigma: int, edits: int) -> tuple[bytes, bytes]:
    """T is S with a few random edits, trimmed or padded back to length n."""
    s = bytearray(97 + rng.randrange(sigma) for _ in range(n))
    t = bytearray(s)
    for _ in range(edits):
        i = rng.randrange(len(t) + 1)
        kind = rng.randrange(3)
        if kind == 0 and i < len(t):
            t[i] = 97 + rng.randrange(sigma)
        elif kind == 1:
            t.insert(i, 97 + rng.randrange(sigma))
        elif i < len(t):
            del t[i]
    while len(t) < n:
        t.append(97 + rng.randrange(sigma))
    return bytes(s), bytes(t[:n])


def random_instances(count: int = 2000, seed: int = 20240917):
    """``count`` instances, n in 16..512 (log-uniform), d in 0..8, alphabets 2/4/26.

    Half are independent random pairs; half are near-copies, which produce the
    long alignments and window cuts that independent pairs rarely reach.
    """
    rng = random.Random(seed)
    lo, hi = math.log(16), math.log(512)
    out = []
    for i in range(count):
        n = min(512, max(16, round(math.exp(rng.uniform(lo, hi)))))
        d = rng.randint(0, 8)
        sigma = ALPHABETS[i % 3]
        if i % 2:
            s, t = mutated_pair(rng, n, sigma, rng.randint(0, max(1, n // 8)))
        else:
            s, t = random_pair(rng, n, sigma)
        out.append((f"random-{i}", s, t, d))
    return out


def adversarial_instances(seed: int = 7):
    rng = random.Random(seed)
    out = []
    for d in range(0, 9):
        for n in (16, 100, 300):
            s = bytes(97 + rng.randrange(4) for _ in range(n))
            out.append((f"all-equal-{n}-{d}", s, s, d))
            out.append((f"all-distinct-{n}-{d}", b"a" * n, b"b" * n, d))
            p = rng.randint(1, 6)
            unit = bytes(97 + rng.randrange(3) for _ in range(p))
            per = (unit * (n // p + 2))[:n]
            shift = rng.randint(1, p + 1)
            out.append((f"periodic-{n}-{d}-p{p}", per, (unit * (n // p + 3))[shift : shift + n], d))
    for i in range(30):
        d = 1 + i % 5
        n = rng.randint(d + 1, 12)
        x, y = sample_ham_pair(n, d, 1000 + i)
        sx, sy = s_transform(x, d), s_transform(y, d)
        out.append((f"s-pair-{i}", sx, sy, d))
        out.append((f"t-pair-{i}", t_transform(sx, d, len(sx)), t_transform(sy, d, len(sy)), d))
    return out


def full_corpus():
    return random_instances() + adversarial_instances()
