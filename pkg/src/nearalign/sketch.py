"""Streaming banded edit-distance state for one anchor position.

The sketch answers ``ed(S[origin, x], T[origin, x])`` after every synchronized
pair, or reports that it exceeds the budget ``d``. It keeps the DP frontier of
the square ``[origin, x]^2`` restricted to the ``2d+1`` diagonals
``delta = j - i`` in ``[-d, d]``:

* ``delta <= 0``: cell ``(x, x + delta)`` on the last row,
* ``delta >= 0``: cell ``(x - delta, x)`` on the last column.

Every path that leaves the square passes through one of these cells, so the
frontier is a complete state for the future of this anchor. Advancing it by
one pair needs only the last ``d+1`` symbols of each stream.
"""
from __future__ import annotations

from collections import deque
from typing import Optional

from .core import EXCEEDED, EditOp, EditScript, Exceeded, InvalidParams, canonicalize

# persistent op chains: None or (op, parent_chain)
OpChain = Optional[tuple]


def chain_to_script(chain: OpChain) -> EditScript:
    ops = []
    while chain is not None:
        ops.append(chain[0])
        chain = chain[1]
    return canonicalize(ops)


def _advance_costs(band, d, s_hist, t_hist):
    """Cost-only version of :func:`advance_band`."""
    inf = d + 1
    new = [inf] * (2 * d + 1)
    hs = len(s_hist)
    s_new = s_hist[-1]
    t_new = t_hist[-1]
    for k in range(d, 0, -1):
        idx = d + k
        best = band[idx - 1] + 1
        if k < hs:
            v = band[idx] + (s_hist[-1 - k] != t_new)
            if v < best:
                best = v
        if k < d:
            v = new[idx + 1] + 1
            if v < best:
                best = v
        new[idx] = best if best < inf else inf
        idx = d - k
        best = band[idx + 1] + 1
        if k < hs:
            v = band[idx] + (s_new != t_hist[-1 - k])
            if v < best:
                best = v
        if k < d:
            v = new[idx - 1] + 1
            if v < best:
                best = v
        new[idx] = best if best < inf else inf
    best = band[d] + (s_new != t_new)
    if d:
        v = new[d + 1] + 1
        if v < best:
            best = v
        v = new[d - 1] + 1
        if v < best:
            best = v
    new[d] = best if best < inf else inf
    return new


def advance_band(band, d, x, s_hist, t_hist, chains=None):
    """Advance a frontier from position ``x - 1`` to ``x``.

    ``band`` holds capped costs (``d + 1`` stands for "more than d");
    ``s_hist``/``t_hist`` end with ``S[x]``/``T[x]`` and hold at least
    ``min(d+1, steps)`` symbols. When ``chains`` is given, the op chain of
    every cell is advanced too. Ties prefer the diagonal move, then deletion,
    then insertion. Returns the new band (and chains).
    """
    if chains is None:
        return _advance_costs(band, d, s_hist, t_hist), None
    inf = d + 1
    w = 2 * d + 1
    new = [inf] * w
    new_chains = [None] * w
    hs = len(s_hist)
    s_new = s_hist[-1]
    t_new = t_hist[-1]

    # last column: cells (x - k, x), k = d .. 1
    for k in range(d, 0, -1):
        idx = d + k
        best = inf
        how = 0
        if k < hs:
            v = band[idx]
            if v < inf:
                sym = s_hist[-1 - k]
                v += sym != t_new
                if v < best:
                    best, how = v, 1
        if k < d:
            v = new[idx + 1] + 1
            if v < best:
                best, how = v, 2
        v = band[idx - 1] + 1
        if v < best:
            best, how = v, 3
        new[idx] = best
        if new_chains is not None and how:
            i = x - k
            if how == 1:
                c = chains[idx]
                sym = s_hist[-1 - k]
                new_chains[idx] = c if sym == t_new else (EditOp.substitute(i, x, sym, t_new), c)
            elif how == 2:
                new_chains[idx] = (EditOp.delete(i, s_hist[-1 - k]), new_chains[idx + 1])
            else:
                new_chains[idx] = (EditOp.insert(x, t_new), chains[idx - 1])

    # last row: cells (x, x - k), k = d .. 1
    for k in range(d, 0, -1):
        idx = d - k
        best = inf
        how = 0
        if k < hs:
            v = band[idx]
            if v < inf:
                sym = t_hist[-1 - k]
                v += s_new != sym
                if v < best:
                    best, how = v, 1
        v = band[idx + 1] + 1
        if v < best:
            best, how = v, 2
        if k < d:
            v = new[idx - 1] + 1
            if v < best:
                best, how = v, 3
        new[idx] = best
        if new_chains is not None and how:
            j = x - k
            if how == 1:
                c = chains[idx]
                sym = t_hist[-1 - k]
                new_chains[idx] = c if sym == s_new else (EditOp.substitute(x, j, s_new, sym), c)
            elif how == 2:
                new_chains[idx] = (EditOp.delete(x, s_new), chains[idx + 1])
            else:
                new_chains[idx] = (EditOp.insert(j, t_hist[-1 - k]), new_chains[idx - 1])

    # corner (x, x)
    best = inf
    how = 0
    v = band[d]
    if v < inf:
        v += s_new != t_new
        best, how = v, 1
    if d:
        v = new[d + 1] + 1
        if v < best:
            best, how = v, 2
        v = new[d - 1] + 1
        if v < best:
            best, how = v, 3
    new[d] = best
    if new_chains is not None and how:
        if how == 1:
            c = chains[d]
            new_chains[d] = c if s_new == t_new else (EditOp.substitute(x, x, s_new, t_new), c)
        elif how == 2:
            new_chains[d] = (EditOp.delete(x, s_new), new_chains[d + 1])
        else:
            new_chains[d] = (EditOp.insert(x, t_new), new_chains[d - 1])
    return new, new_chains


class BandedSketch:
    """Edit-distance state of ``S[origin, x]`` vs ``T[origin, x]`` under budget ``d``.

    With ``track_ops=True`` each frontier cell also carries the ops of one
    optimal path reaching it, so :meth:`script` can return the alignment of
    the consumed window without keeping the window itself.
    """

    __slots__ = ("d", "origin", "steps", "band", "chains", "s_tail", "t_tail", "dead")

    def __init__(self, d: int, origin: int, track_ops: bool = False):
        if d < 0:
            raise InvalidParams(f"budget d must be >= 0, got {d}")
        if origin < 1:
            raise InvalidParams(f"origin must be >= 1, got {origin}")
        self.d = d
        self.origin = origin
        self.steps = 0
        self.band = [d + 1] * (2 * d + 1)
        self.band[d] = 0
        self.chains = [None] * (2 * d + 1) if track_ops else None
        self.s_tail: deque = deque(maxlen=d + 1)
        self.t_tail: deque = deque(maxlen=d + 1)
        self.dead = False

    @property
    def x(self) -> int:
        return self.origin + self.steps - 1

    def update(self, s_sym: int, t_sym: int) -> "BandedSketch":
        self.steps += 1
        if self.dead:
            return self
        self.s_tail.append(s_sym)
        self.t_tail.append(t_sym)
        self.band, self.chains = advance_band(self.band, self.d, self.x, self.s_tail, self.t_tail, self.chains)
        # ed of same-index windows never shrinks as both ends grow, so a
        # centre above budget stays there
        if self.band[self.d] > self.d:
            self.dead = True
            self.band = [self.d + 1] * (2 * self.d + 1)
            self.chains = None
            self.s_tail.clear()
            self.t_tail.clear()
        return self

    def feed(self, s, t) -> "BandedSketch":
        for a, b in zip(s, t):
            self.update(a, b)
        return self

    def distance(self) -> int | Exceeded:
        v = self.band[self.d]
        return EXCEEDED if v > self.d else v

    def script(self) -> EditScript | Exceeded:
        if self.chains is None and not self.dead:
            raise ValueError("sketch was built without op tracking")
        if self.dead:
            return EXCEEDED
        return chain_to_script(self.chains[self.d])

    def frontier(self) -> tuple:
        return tuple(self.band)

    def dominates(self, other: "BandedSketch") -> bool:
        """True when every frontier cost here is <= the other's."""
        return all(a <= b for a, b in zip(self.band, other.band))

    def __repr__(self) -> str:
        return f"BandedSketch(d={self.d}, origin={self.origin}, steps={self.steps}, band={self.band})"


def sketch_new(d: int, origin: int) -> BandedSketch:
    return BandedSketch(d, origin)


def sketch_update(sk: BandedSketch, s_sym: int, t_sym: int) -> BandedSketch:
    return sk.update(s_sym, t_sym)


def current_distance(sk: BandedSketch) -> int | Exceeded:
    return sk.distance()
