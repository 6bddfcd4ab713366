"""Checkpoint-based one-pass approximations of the longest d-near-alignment.

Both engines anchor a :class:`BandedSketch` at a family of checkpoint
positions and, after every pair, promote the oldest checkpoint whose window is
still within budget.

* Multiplicative: level ``k >= k0`` places a checkpoint at every multiple of
  ``floor(alpha * (1+alpha)**(k-2))`` and retires it once it falls more than
  ``2 * (1+alpha)**k`` behind the stream, with ``alpha = sqrt(1+eps) - 1``.
  The result is within a factor ``1+eps`` of the optimum.
* Additive: a checkpoint at every multiple of ``E``; the result is at least
  the optimum minus ``E``.

A sketch that goes over budget is thrown away at once (its start can never be
feasible again), but the schedule entry stays until it retires, so the level
structure is unaffected. Levels sharing a position share one sketch.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field

from .core import InvalidEpsilon, InvalidParams, InvalidWindow, NearAlignment
from .sketch import BandedSketch


def alpha_for(epsilon: float) -> float:
    return math.sqrt(1.0 + epsilon) - 1.0


def first_level(alpha: float) -> int:
    """Smallest level index k0 of the checkpoint hierarchy."""
    k0 = math.ceil(math.log((1 + alpha) ** 2 / alpha) / math.log(1 + alpha) - 1e-9)
    # guard the float rounding: level k0 must have spacing >= 1
    while math.floor(alpha * (1 + alpha) ** (k0 - 2)) < 1:
        k0 += 1
    return k0


@dataclass
class Checkpoint:
    pos: int
    level: int | None
    sketch: BandedSketch | None


@dataclass
class Level:
    k: int
    spacing: int
    retention: float
    positions: deque = field(default_factory=deque)


@dataclass
class ApproxStats:
    max_live_checkpoints: int = 0  # distinct scheduled positions
    max_level_entries: int = 0  # (level, position) pairs
    max_sketches: int = 0  # sketches still within budget
    sketches_created: int = 0
    levels: int = 0


class _Base:
    mode = ""

    def __init__(self, d: int, executor=None):
        if d < 0:
            raise InvalidParams(f"budget d must be >= 0, got {d}")
        self.d = d
        self.x = 0
        self.sketches: dict[int, BandedSketch] = {}
        self.best_start = 0
        self.best_len = 0
        self.stats = ApproxStats()
        self._executor = executor

    def _open(self, pos: int, s_sym: int, t_sym: int) -> None:
        if pos in self.sketches:
            return
        sk = BandedSketch(self.d, pos)
        sk.update(s_sym, t_sym)
        self.stats.sketches_created += 1
        if not sk.dead:
            self.sketches[pos] = sk

    def _advance(self, s_sym: int, t_sym: int) -> None:
        live = list(self.sketches.values())
        if self._executor is not None and len(live) > 1:
            list(self._executor.map(lambda sk: sk.update(s_sym, t_sym), live))
        else:
            for sk in live:
                sk.update(s_sym, t_sym)
        for sk in live:
            if sk.dead:
                del self.sketches[sk.origin]

    def _promote(self) -> None:
        x = self.x
        # every sketch left is within budget; the oldest one gives the longest window
        if self.sketches:
            c = min(self.sketches)
            if x - c + 1 > self.best_len:
                self.best_start, self.best_len = c, x - c + 1

    def feed(self, s, t):
        for a, b in zip(s, t):
            self.step(a, b)
        return self

    @property
    def params(self) -> dict:
        raise NotImplementedError

    def result(self) -> NearAlignment | None:
        if not self.best_len:
            return None
        return NearAlignment(self.best_start, self.best_start + self.best_len - 1, self.mode, self.params)


class MultiplicativeApprox(_Base):
    """(1+eps)-approximation via geometric checkpoint levels."""

    mode = "multiplicative"

    def __init__(self, d: int, epsilon: float, executor=None):
        if not epsilon > 0 or math.isinf(epsilon):
            raise InvalidEpsilon(f"epsilon must be a positive finite number, got {epsilon}")
        super().__init__(d, executor)
        self.epsilon = epsilon
        self.alpha = alpha_for(epsilon)
        self.k0 = first_level(self.alpha)
        self.levels: list[Level] = []
        self._next_spacing = self._spacing(self.k0)
        self._refs: dict[int, int] = {}
        self._due: list[tuple[int, int]] = []  # (next multiple, level index)
        self._expiry: dict[int, list[int]] = {}  # step -> level indices
        self._entries = 0

    def _spacing(self, k: int) -> int:
        return math.floor(self.alpha * (1 + self.alpha) ** (k - 2))

    def _retention(self, k: int) -> float:
        return 2 * (1 + self.alpha) ** k

    @property
    def params(self) -> dict:
        return {"d": self.d, "epsilon": self.epsilon}

    def _grow_levels(self) -> None:
        # a level matters once its first multiple has arrived
        while self._next_spacing <= self.x:
            k = self.k0 + len(self.levels)
            spacing = self._next_spacing
            self.levels.append(Level(k, spacing, self._retention(k)))
            heapq.heappush(self._due, (spacing, len(self.levels) - 1))
            self._next_spacing = self._spacing(k + 1)
            if self._next_spacing < spacing:
                raise ArithmeticError("level spacing must not decrease")
        self.stats.levels = len(self.levels)

    def _add_ref(self, pos: int) -> None:
        self._refs[pos] = self._refs.get(pos, 0) + 1
        self._entries += 1

    def _drop_ref(self, pos: int) -> None:
        self._entries -= 1
        left = self._refs[pos] - 1
        if left:
            self._refs[pos] = left
        else:
            del self._refs[pos]
            self.sketches.pop(pos, None)

    def step(self, s_sym: int, t_sym: int) -> "MultiplicativeApprox":
        self.x += 1
        x = self.x
        self._advance(s_sym, t_sym)
        self._grow_levels()
        if x == 1:
            # permanent anchor so windows starting at the very first pair are covered
            self._add_ref(1)
            self._open(1, s_sym, t_sym)
        while self._due and self._due[0][0] == x:
            _, li = heapq.heappop(self._due)
            lv = self.levels[li]
            lv.positions.append(x)
            self._add_ref(x)
            self._open(x, s_sym, t_sym)
            heapq.heappush(self._due, (x + lv.spacing, li))
            # retired once c < x' - retention, i.e. at x' = floor(c + retention) + 1
            self._expiry.setdefault(math.floor(x + lv.retention) + 1, []).append(li)
        for li in self._expiry.pop(x, ()):
            pos = self.levels[li].positions.popleft()
            self._drop_ref(pos)
        self._promote()
        st = self.stats
        st.max_live_checkpoints = max(st.max_live_checkpoints, len(self._refs))
        st.max_level_entries = max(st.max_level_entries, self._entries)
        st.max_sketches = max(st.max_sketches, len(self.sketches))
        return self

    def checkpoints(self) -> list[Checkpoint]:
        """Every scheduled (position, level) entry, plus the permanent first position."""
        out = [Checkpoint(1, None, self.sketches.get(1))] if self.x else []
        for lv in self.levels:
            out.extend(Checkpoint(p, lv.k, self.sketches.get(p)) for p in lv.positions)
        return out

    def live_positions(self) -> int:
        return len(self._refs)


class AdditiveApprox(_Base):
    """Checkpoints at every multiple of ``E``; loses at most ``E`` positions."""

    mode = "additive"

    def __init__(self, d: int, error: int, executor=None):
        if isinstance(error, bool) or not isinstance(error, int) or error < 1:
            raise InvalidWindow(f"additive error E must be an integer >= 1, got {error!r}")
        super().__init__(d, executor)
        self.error = error
        self.positions: list[int] = []

    @property
    def params(self) -> dict:
        return {"d": self.d, "E": self.error}

    def step(self, s_sym: int, t_sym: int) -> "AdditiveApprox":
        self.x += 1
        x = self.x
        self._advance(s_sym, t_sym)
        if x % self.error == 0:
            self.positions.append(x)
            self._open(x, s_sym, t_sym)
        self._promote()
        st = self.stats
        st.max_live_checkpoints = max(st.max_live_checkpoints, len(self.sketches))
        st.max_sketches = st.max_live_checkpoints
        return self

    def checkpoints(self) -> list[Checkpoint]:
        return [Checkpoint(p, None, self.sketches.get(p)) for p in self.positions]


ApproxState = _Base


def mult_new(d: int, epsilon: float) -> MultiplicativeApprox:
    return MultiplicativeApprox(d, epsilon)


def mult_step(st: MultiplicativeApprox, s_sym: int, t_sym: int) -> MultiplicativeApprox:
    return st.step(s_sym, t_sym)


def add_new(d: int, error: int) -> AdditiveApprox:
    return AdditiveApprox(d, error)


def add_step(st: AdditiveApprox, s_sym: int, t_sym: int) -> AdditiveApprox:
    return st.step(s_sym, t_sym)


def approx_result(st: _Base) -> NearAlignment | None:
    return st.result()
