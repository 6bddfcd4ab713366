"""Brute-force references used by the property suites.

Deliberately unoptimized and independent of the streaming kernels.
"""
from __future__ import annotations

from .core import EditOp, EditScript, LengthMismatch, NearAlignError, as_bytes, canonicalize

MAX_ORACLE_N = 10_000


class OracleTooLarge(NearAlignError):
    pass


def _guard(n: int) -> None:
    if n > MAX_ORACLE_N:
        raise OracleTooLarge(f"oracle refuses inputs longer than {MAX_ORACLE_N} (got {n})")


def _table(s: bytes, t: bytes) -> list[list[int]]:
    m, n = len(s), len(t)
    D = [[0] * (n + 1) for _ in range(m + 1)]
    for j in range(n + 1):
        D[0][j] = j
    for i in range(1, m + 1):
        row, up = D[i], D[i - 1]
        row[0] = i
        a = s[i - 1]
        for j in range(1, n + 1):
            row[j] = min(up[j - 1] + (a != t[j - 1]), up[j] + 1, row[j - 1] + 1)
    return D


def alignment_trace(s, t) -> list[tuple]:
    """One optimal alignment as a list of columns ``(i, j)``, 1-based; gaps are ``None``."""
    s = as_bytes(s)
    t = as_bytes(t)
    _guard(max(len(s), len(t)))
    D = _table(s, t)
    i, j = len(s), len(t)
    cols = []
    while i or j:
        if i and j and D[i - 1][j - 1] + (s[i - 1] != t[j - 1]) == D[i][j]:
            cols.append((i, j))
            i, j = i - 1, j - 1
        elif i and D[i - 1][j] + 1 == D[i][j]:
            cols.append((i, None))
            i -= 1
        else:
            cols.append((None, j))
            j -= 1
    cols.reverse()
    return cols


def full_edit_distance(s, t) -> tuple[int, EditScript]:
    s = as_bytes(s)
    t = as_bytes(t)
    ops = []
    for i, j in alignment_trace(s, t):
        if i is None:
            ops.append(EditOp.insert(j, t[j - 1]))
        elif j is None:
            ops.append(EditOp.delete(i, s[i - 1]))
        elif s[i - 1] != t[j - 1]:
            ops.append(EditOp.substitute(i, j, s[i - 1], t[j - 1]))
    return len(ops), canonicalize(ops)


def edit_cost(s, t) -> int:
    s = as_bytes(s)
    t = as_bytes(t)
    _guard(max(len(s), len(t)))
    prev = list(range(len(t) + 1))
    for i, a in enumerate(s, 1):
        cur = [i]
        for j, b in enumerate(t, 1):
            cur.append(min(prev[j - 1] + (a != b), prev[j] + 1, cur[j - 1] + 1))
        prev = cur
    return prev[-1]


def _furthest_end(s: bytes, t: bytes, i: int, d: int) -> int:
    """Largest k with ed(s[i:i+k], t[i:i+k]) <= d, growing both suffixes together."""
    n = len(s) - i
    big = d + 1
    # full-width rows over t[i:], capped at d+1; plain but fast enough
    prev = [min(c, big) for c in range(n + 1)]
    best = 0
    for r in range(1, n + 1):
        a = s[i + r - 1]
        cur = [big] * (n + 1)
        cur[0] = min(r, big)
        lo = max(1, r - d)
        hi = min(n, r + d)
        for c in range(lo, hi + 1):
            v = prev[c - 1] + (a != t[i + c - 1])
            u = prev[c] + 1
            if u < v:
                v = u
            u = cur[c - 1] + 1
            if u < v:
                v = u
            cur[c] = v if v < big else big
        if cur[r] <= d:
            best = r
        if min(cur[max(0, r - d):hi + 1]) > d:
            break
        prev = cur
    return best


def oracle_lmax(s, t, d: int) -> tuple[int, int, int] | None:
    """Longest same-index window pair within edit distance ``d``.

    Returns ``(length, start, end)`` with 1-based inclusive ends; among equally
    long windows the leftmost wins. ``None`` when no window qualifies.
    """
    s = as_bytes(s)
    t = as_bytes(t)
    if len(s) != len(t):
        raise LengthMismatch(f"streams differ in length: {len(s)} vs {len(t)}")
    n = len(s)
    _guard(n)
    best = None
    for i in range(n):
        if best is not None and n - i <= best[0]:
            break
        k = _furthest_end(s, t, i, d)
        if k and (best is None or k > best[0]):
            best = (k, i + 1, i + k)
    return best


def naive_lmax(s, t, d: int) -> tuple[int, int, int] | None:
    """All-pairs double loop; only for small inputs."""
    s = as_bytes(s)
    t = as_bytes(t)
    if len(s) != len(t):
        raise LengthMismatch(f"streams differ in length: {len(s)} vs {len(t)}")
    n = len(s)
    best = None
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if edit_cost(s[i - 1:j], t[i - 1:j]) <= d:
                ln = j - i + 1
                if best is None or ln > best[0]:
                    best = (ln, i, j)
    return best


def hamming(x, y) -> int:
    x = as_bytes(x)
    y = as_bytes(y)
    if len(x) != len(y):
        raise LengthMismatch(f"hamming needs equal lengths, got {len(x)} and {len(y)}")
    return sum(a != b for a, b in zip(x, y))
