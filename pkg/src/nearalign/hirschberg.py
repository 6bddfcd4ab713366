"""Budgeted alignment recovery on in-memory windows.

All routines restrict the DP to the diagonals ``|i - j| <= d`` of the window
pair: a path of cost at most ``d`` can never leave them, so values up to ``d``
are exact and anything larger is reported as :data:`EXCEEDED`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import EXCEEDED, EditOp, EditScript, Exceeded, as_bytes, canonicalize


@dataclass
class HirschbergStats:
    """Structural counters filled in by :func:`modified_hirschberg`."""

    max_row_cells: int = 0
    max_depth: int = 0
    calls: int = 0

    def row(self, cells: int) -> None:
        if cells > self.max_row_cells:
            self.max_row_cells = cells


def banded_distance(s_win, t_win, d: int) -> int | Exceeded:
    s = as_bytes(s_win)
    t = as_bytes(t_win)
    m, n = len(s), len(t)
    if abs(m - n) > d:
        return EXCEEDED
    row = _forward_row(s, t, 0, m, 0, n, d, None, stop_early=True)
    if row is None:
        return EXCEEDED
    v = row.get(n, d + 1)
    return EXCEEDED if v > d else v


# Band rows are lists indexed by diagonal: slot k of row i holds column
# j = i + k - d. Moving one row keeps the diagonal (slot k), a vertical step
# comes from slot k + 1 of the previous row, a horizontal one from slot k - 1.


def _forward_row(s, t, i0, i1, j0, j1, d, stats, stop_early=False):
    """Costs of s[i0:i1] vs t[j0:j] for every in-band j of row i1 (capped at d+1)."""
    inf = d + 1
    w = 2 * d + 1
    prev = [inf] * (w + 1)  # trailing sentinel slot
    for k in range(w):
        j = i0 + k - d
        if j0 <= j <= j1:
            v = j - j0
            prev[k] = v if v < inf else inf
    if stats is not None:
        stats.row(sum(1 for k in range(w) if j0 <= i0 + k - d <= j1))
    for i in range(i0 + 1, i1 + 1):
        cur = [inf] * (w + 1)
        si = s[i - 1]
        lo = max(0, j0 - i + d)
        hi = min(w - 1, j1 - i + d)
        alive = False
        left = inf
        for k in range(lo, hi + 1):
            j = i + k - d
            if j == j0:
                v = i - i0
                if v > inf:
                    v = inf
            else:
                v = prev[k] + (si != t[j - 1])
                u = prev[k + 1] + 1
                if u < v:
                    v = u
                u = left + 1
                if u < v:
                    v = u
                if v > inf:
                    v = inf
            cur[k] = v
            left = v
            if v < inf:
                alive = True
        if stats is not None:
            stats.row(hi - lo + 1)
        if stop_early and not alive:
            return None
        prev = cur
    return {i1 + k - d: prev[k] for k in range(w) if j0 <= i1 + k - d <= j1}


def _backward_row(s, t, i0, i1, j0, j1, d, stats):
    """Costs of s[i0:i1] vs t[j:j1] for every in-band j of row i0 (capped at d+1)."""
    inf = d + 1
    w = 2 * d + 1
    prev = [inf] * (w + 1)
    for k in range(w):
        j = i1 + k - d
        if j0 <= j <= j1:
            v = j1 - j
            prev[k] = v if v < inf else inf
    if stats is not None:
        stats.row(sum(1 for k in range(w) if j0 <= i1 + k - d <= j1))
    for i in range(i1 - 1, i0 - 1, -1):
        # R(i, j) from R(i+1, j+1) (slot k), R(i+1, j) (slot k-1), R(i, j+1) (slot k+1)
        cur = [inf] * (w + 1)
        si = s[i]
        lo = max(0, j0 - i + d)
        hi = min(w - 1, j1 - i + d)
        right = inf
        for k in range(hi, lo - 1, -1):
            j = i + k - d
            if j == j1:
                v = i1 - i
                if v > inf:
                    v = inf
            else:
                v = prev[k] + (si != t[j])
                u = (prev[k - 1] if k else inf) + 1
                if u < v:
                    v = u
                u = right + 1
                if u < v:
                    v = u
                if v > inf:
                    v = inf
            cur[k] = v
            right = v
        if stats is not None:
            stats.row(hi - lo + 1)
        prev = cur
    return {i0 + k - d: prev[k] for k in range(w) if j0 <= i0 + k - d <= j1}


def _base_align(s, t, i0, i1, j0, j1, d, out):
    """Full traceback inside a small rectangle of the band."""
    big = 1 << 30
    cost = {}
    for i in range(i0, i1 + 1):
        for j in range(max(j0, i - d), min(j1, i + d) + 1):
            if i == i0:
                cost[i, j] = j - j0
            elif j == j0:
                cost[i, j] = i - i0
            else:
                cost[i, j] = min(
                    cost.get((i - 1, j - 1), big) + (s[i - 1] != t[j - 1]),
                    cost.get((i - 1, j), big) + 1,
                    cost.get((i, j - 1), big) + 1,
                )
    i, j = i1, j1
    while i > i0 or j > j0:
        here = cost[i, j]
        if i > i0 and j > j0 and cost.get((i - 1, j - 1), big) + (s[i - 1] != t[j - 1]) == here:
            if s[i - 1] != t[j - 1]:
                out.append(EditOp.substitute(i, j, s[i - 1], t[j - 1]))
            i -= 1
            j -= 1
        elif i > i0 and cost.get((i - 1, j), big) + 1 == here:
            out.append(EditOp.delete(i, s[i - 1]))
            i -= 1
        else:
            out.append(EditOp.insert(j, t[j - 1]))
            j -= 1


def _split(s, t, i0, i1, j0, j1, d, out, depth, stats):
    stats.calls += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    if i1 - i0 <= 1 or j1 - j0 <= 1:
        _base_align(s, t, i0, i1, j0, j1, d, out)
        return
    mid = (i0 + i1) // 2
    fwd = _forward_row(s, t, i0, mid, j0, j1, d, stats)
    bwd = _backward_row(s, t, mid, i1, j0, j1, d, stats)
    best = None
    q = None
    for j in sorted(fwd):
        if j in bwd:
            v = fwd[j] + bwd[j]
            if best is None or v < best:
                best, q = v, j
    _split(s, t, i0, mid, j0, q, d, out, depth + 1, stats)
    _split(s, t, mid, i1, q, j1, d, out, depth + 1, stats)


def modified_hirschberg(s_win, t_win, d: int, stats: HirschbergStats | None = None) -> EditScript | Exceeded:
    """Optimal canonical script for ``s_win -> t_win`` if it costs at most ``d``.

    Positions in the script are 1-based within the windows. Memory is the two
    windows plus O(d) scores per DP row; recursion depth is about log2(m).
    """
    s = as_bytes(s_win)
    t = as_bytes(t_win)
    if stats is None:
        stats = HirschbergStats()
    if banded_distance(s, t, d) is EXCEEDED:
        return EXCEEDED
    out: list[EditOp] = []
    _split(s, t, 0, len(s), 0, len(t), d, out, 0, stats)
    return canonicalize(out)


def smallest_feasible_start(s_win, t_win, d: int) -> int | None:
    """Smallest window-local start ``c`` with ``ed(s[c:], t[c:]) <= d``, 1-based.

    One reverse banded pass from the right edge. Same-index suffix distance
    only grows as the start moves left, so the scan stops at the first start
    over budget.
    """
    s = as_bytes(s_win)
    t = as_bytes(t_win)
    m = len(s)
    if len(t) != m:
        raise ValueError("windows must have equal length")
    inf = d + 1
    w = 2 * d + 1
    # R(i, j) = ed(s[i:], t[j:]), slot k of row i is column i + k - d
    prev = [inf] * (w + 1)
    for k in range(d + 1):
        j = m + k - d
        if j >= 0:
            prev[k] = m - j
    found = None
    for i in range(m - 1, -1, -1):
        cur = [inf] * (w + 1)
        si = s[i]
        lo = max(0, d - i)
        hi = min(w - 1, m - i + d)
        right = inf
        for k in range(hi, lo - 1, -1):
            j = i + k - d
            if j == m:
                v = m - i
                if v > inf:
                    v = inf
            else:
                v = prev[k] + (si != t[j])
                u = (prev[k - 1] if k else inf) + 1
                if u < v:
                    v = u
                u = right + 1
                if u < v:
                    v = u
                if v > inf:
                    v = inf
            cur[k] = v
            right = v
        if cur[d] > d:
            break
        found = i + 1
        prev = cur
    return found
