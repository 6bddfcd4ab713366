"""One-pass exact longest d-near-alignment.

The engine keeps a sliding window ``[b, x]`` of both streams plus a short
list of *carried* anchors that start before ``b``.

Two facts about same-index windows drive it. For any strings and symbols,
``ed(Xa, Yb) >= ed(X, Y)`` and ``ed(aX, bY) >= ed(X, Y)``. Hence the feasible
starts for the current end ``x`` always form an interval ``[c(x), x]``, and
``c(x)`` never moves left. A start that fails once is gone for good.

Each step:

1. Append the pair and advance the window sketch (anchored at ``b``) and
   every carried anchor.
2. If the window itself is over budget, every carried anchor is dead too;
   find ``c(x)`` with one reverse banded pass and trim the window to it.
   Otherwise ``c(x)`` is the oldest carried anchor, or ``b``.
3. Record ``[c(x), x]`` if it beats the best so far. Its script comes from
   the carried anchor's op chains or from the banded Hirschberg on the window.
4. While the window's optimal alignment contains ``d+1`` consecutive matched
   pairs, cut the window at the end of that run. Starts in front of the cut
   become carried anchors holding their DP frontier and op chains. An anchor
   whose frontier is dominated by an older one's can never be the leftmost
   feasible start, so it is dropped.

After every step the window is within budget and its optimal alignment has
no ``d+1`` run except possibly one at its very start. With at most ``d`` ops
and fewer than ``d+1`` matched pairs between them, the window stays within
``(d+1)*(d+2)`` symbols.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import EXCEEDED, EditOp, EditScript, InvalidParams, NearAlignment, canonicalize
from .hirschberg import HirschbergStats, modified_hirschberg, smallest_feasible_start
from .sketch import BandedSketch


def detect_run(script: EditScript, window_len: int, d: int) -> tuple[int, int, int, int] | None:
    """Leftmost maximal run of at least ``d+1`` matched pairs in an alignment.

    ``script`` aligns two windows of ``window_len`` symbols (1-based local
    positions). Returns ``(i1, j1, i2, j2)`` with ``S[i1, j1]`` matched
    pair-by-pair to ``T[i2, j2]``, or ``None``.
    """
    dels = set()
    subs = set()
    ins = set()
    for op in script.ops:
        if op.kind == "del":
            dels.add(op.s_pos)
        elif op.kind == "ins":
            ins.add(op.t_pos)
        else:
            subs.add(op.s_pos)
    i = j = 1
    run_i = run_j = None
    length = 0
    while i <= window_len or j <= window_len:
        if i <= window_len and i in dels:
            i += 1
        elif j <= window_len and j in ins:
            j += 1
        elif i <= window_len and j <= window_len and i not in subs:
            if length == 0:
                run_i, run_j = i, j
            length += 1
            i += 1
            j += 1
            continue
        else:
            i += 1
            j += 1
        if length > d:
            break
        length = 0
    if length > d:
        return run_i, run_i + length - 1, run_j, run_j + length - 1
    return None


@dataclass
class ExactStats:
    max_window: int = 0
    max_window_within_budget: int = 0
    max_carried: int = 0
    hirschberg_calls: int = 0
    cuts: int = 0
    window_trace: list = field(default_factory=list)
    hirschberg: HirschbergStats = field(default_factory=HirschbergStats)


class ExactEngine:
    """Streaming state for the exact longest d-near-alignment.

    ``recompute_always`` re-runs the window alignment on every step; the
    default only does so when some diagonal of the window holds ``d+1``
    consecutive equal pairs, which is necessary for a run to exist.
    """

    mode = "exact"

    def __init__(self, d: int, recompute_always: bool = False, trace_windows: bool = False, executor=None):
        if d < 0:
            raise InvalidParams(f"budget d must be >= 0, got {d}")
        self.d = d
        self.recompute_always = recompute_always
        self.b = 1
        self.x = 0
        self.s_buf = bytearray()
        self.t_buf = bytearray()
        self.window = BandedSketch(d, 1)
        self.carried: list[BandedSketch] = []
        self.best: NearAlignment | None = None
        self.stats = ExactStats()
        self._trace_windows = trace_windows
        self._executor = executor
        # per diagonal offset: current run of equal pairs and the S index
        # ending the latest run of d+1
        self._s_tail: deque = deque(maxlen=d + 1)
        self._t_tail: deque = deque(maxlen=d + 1)
        self._run_len = [0] * (2 * d + 1)
        self._run_hit = [0] * (2 * d + 1)

    @property
    def length(self) -> int:
        return self.best.length if self.best else 0

    def _track_diagonals(self) -> None:
        d, x = self.d, self.x
        s_tail, t_tail = self._s_tail, self._t_tail
        h = len(s_tail)
        s_new, t_new = s_tail[-1], t_tail[-1]
        for k in range(h):
            # offset +k pairs S[x-k] with T[x]; offset -k pairs S[x] with T[x-k]
            up = d + k
            if s_tail[-1 - k] == t_new:
                self._run_len[up] += 1
                if self._run_len[up] > d:
                    self._run_hit[up] = x - k
            else:
                self._run_len[up] = 0
            if k:
                lo = d - k
                if s_new == t_tail[-1 - k]:
                    self._run_len[lo] += 1
                    if self._run_len[lo] > d:
                        self._run_hit[lo] = x
                else:
                    self._run_len[lo] = 0

    def _run_possible(self) -> bool:
        d, b = self.d, self.b
        for idx in range(2 * d + 1):
            end_i = self._run_hit[idx]
            if not end_i:
                continue
            start_i = end_i - d
            start_j = start_i + idx - d
            if start_i >= b and start_j >= b:
                return True
        return False

    def _reset_window(self, new_b: int) -> None:
        drop = new_b - self.b
        del self.s_buf[:drop]
        del self.t_buf[:drop]
        self.b = new_b
        self.window = BandedSketch(self.d, new_b).feed(self.s_buf, self.t_buf)

    def _carry(self, new_b: int) -> None:
        """Turn window starts ``[b, new_b)`` into carried anchors."""
        fresh = []
        for c in range(self.b, new_b):
            off = c - self.b
            sk = BandedSketch(self.d, c, track_ops=True).feed(self.s_buf[off:], self.t_buf[off:])
            fresh.append(sk)
        kept: list[BandedSketch] = []
        for sk in self.carried + fresh:
            if sk.dead or any(old.dominates(sk) for old in kept):
                continue
            kept.append(sk)
        self.carried = kept

    def _cut_runs(self) -> None:
        d = self.d
        if not self.s_buf:
            return
        if not (self.recompute_always or self._run_possible()):
            return
        while self.s_buf:
            self.stats.hirschberg_calls += 1
            script = modified_hirschberg(self.s_buf, self.t_buf, d, self.stats.hirschberg)
            if script is EXCEEDED:
                raise AssertionError("window over budget at cut time")
            run = detect_run(script, len(self.s_buf), d)
            if run is None:
                return
            i1, j1, i2, j2 = run
            new_b = self.b + min(j1, j2) - 1
            if new_b <= self.b:
                return
            self.stats.cuts += 1
            self._carry(new_b)
            self._reset_window(new_b)

    def _advance_carried(self, s_sym: int, t_sym: int) -> None:
        if not self.carried:
            return
        if self._executor is not None and len(self.carried) > 1:
            list(self._executor.map(lambda sk: sk.update(s_sym, t_sym), self.carried))
        else:
            for sk in self.carried:
                sk.update(s_sym, t_sym)
        # dead anchors are a prefix: later starts are never further over budget
        self.carried = [sk for sk in self.carried if not sk.dead]

    def _window_script(self, c: int) -> EditScript:
        off = c - self.b
        self.stats.hirschberg_calls += 1
        script = modified_hirschberg(self.s_buf[off:], self.t_buf[off:], self.d, self.stats.hirschberg)
        return script.shifted(c - 1)

    def step(self, s_sym: int, t_sym: int) -> "ExactEngine":
        d = self.d
        self.x += 1
        x = self.x
        self.s_buf.append(s_sym)
        self.t_buf.append(t_sym)
        self._s_tail.append(s_sym)
        self._t_tail.append(t_sym)
        self._track_diagonals()
        self.window.update(s_sym, t_sym)
        self._advance_carried(s_sym, t_sym)
        peak = x - self.b + 1
        peak_dist = self.window.distance()
        if peak > self.stats.max_window:
            self.stats.max_window = peak
        if peak_dist is not EXCEEDED and peak > self.stats.max_window_within_budget:
            self.stats.max_window_within_budget = peak

        if peak_dist is EXCEEDED:
            self.carried = []
            local = smallest_feasible_start(self.s_buf, self.t_buf, d)
            if local is None:
                c = None
                self._reset_window(x + 1)
            else:
                c = self.b + local - 1
                self._reset_window(c)
        else:
            c = self.carried[0].origin if self.carried else self.b

        if c is not None and x - c + 1 > self.length:
            if self.carried and c == self.carried[0].origin:
                script = self.carried[0].script()
            else:
                script = self._window_script(c)
            self.best = NearAlignment(c, x, "exact", {"d": d}, canonicalize(script))

        self._cut_runs()

        w = x - self.b + 1
        st = self.stats
        if self.window.distance() is not EXCEEDED:
            st.max_window_within_budget = max(st.max_window_within_budget, w)
        st.max_carried = max(st.max_carried, len(self.carried))
        if self._trace_windows:
            # (window before trimming, its distance, window after the step, its distance)
            st.window_trace.append((peak, peak_dist, w, self.window.distance()))
        return self

    def feed(self, s, t) -> "ExactEngine":
        for a, b in zip(s, t):
            self.step(a, b)
        return self

    def result(self) -> NearAlignment | None:
        return self.best


WindowState = ExactEngine


def exact_new(d: int, recompute_always: bool = False) -> ExactEngine:
    return ExactEngine(d, recompute_always=recompute_always)


def exact_step(st: ExactEngine, s_sym: int, t_sym: int) -> ExactEngine:
    return st.step(s_sym, t_sym)


def exact_result(st: ExactEngine) -> NearAlignment | None:
    return st.result()
