"""Domain types shared by every engine, plus edit-script application.

Positions are 1-based and, unless a caller says otherwise, expressed in the
coordinates of the original streams. Symbols are byte values (ints 0..255).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

SUB = "sub"
INS = "ins"
DEL = "del"

_KIND_ORDER = {SUB: 0, INS: 1, DEL: 2}

Symbols = Union[bytes, bytearray, str, Sequence[int]]


class NearAlignError(Exception):
    """Base class for errors raised by this package."""


class PositionOutOfRange(NearAlignError):
    pass


class InvalidScript(NearAlignError):
    pass


class InvalidParams(NearAlignError):
    pass


class InvalidEpsilon(InvalidParams):
    pass


class InvalidWindow(InvalidParams):
    pass


class LengthMismatch(NearAlignError):
    pass


class Exceeded(enum.Enum):
    """Marker for "the edit distance is larger than the budget"."""

    EXCEEDED = "exceeded"

    def __repr__(self) -> str:
        return "EXCEEDED"


EXCEEDED = Exceeded.EXCEEDED


def as_bytes(seq: Symbols) -> bytes:
    if isinstance(seq, str):
        return seq.encode("latin-1")
    return bytes(seq)


@dataclass(frozen=True, slots=True)
class SymbolPair:
    index: int
    s_sym: int
    t_sym: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise InvalidParams(f"stream index must be >= 1, got {self.index}")


@dataclass(frozen=True, slots=True)
class EditOp:
    """One located edit.

    ``sub`` carries both positions and symbols, ``ins`` only the T side (the
    symbol ``T[t_pos]`` has no counterpart in S), ``del`` only the S side.
    """

    kind: str
    s_pos: Optional[int] = None
    t_pos: Optional[int] = None
    s_sym: Optional[int] = None
    t_sym: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == SUB:
            ok = None not in (self.s_pos, self.t_pos, self.s_sym, self.t_sym)
        elif self.kind == INS:
            ok = self.t_pos is not None and self.t_sym is not None and self.s_pos is None and self.s_sym is None
        elif self.kind == DEL:
            ok = self.s_pos is not None and self.s_sym is not None and self.t_pos is None and self.t_sym is None
        else:
            raise InvalidScript(f"unknown edit kind {self.kind!r}")
        if not ok:
            raise InvalidScript(f"malformed {self.kind} op: {self}")

    @classmethod
    def substitute(cls, s_pos: int, t_pos: int, s_sym: int, t_sym: int) -> "EditOp":
        return cls(SUB, s_pos, t_pos, s_sym, t_sym)

    @classmethod
    def insert(cls, t_pos: int, t_sym: int) -> "EditOp":
        return cls(INS, t_pos=t_pos, t_sym=t_sym)

    @classmethod
    def delete(cls, s_pos: int, s_sym: int) -> "EditOp":
        return cls(DEL, s_pos=s_pos, s_sym=s_sym)

    @property
    def anchor(self) -> int:
        if self.kind == SUB:
            return min(self.s_pos, self.t_pos)
        return self.t_pos if self.kind == INS else self.s_pos

    def shifted(self, offset: int) -> "EditOp":
        """Same op with every position moved by ``offset``."""
        return EditOp(
            self.kind,
            None if self.s_pos is None else self.s_pos + offset,
            None if self.t_pos is None else self.t_pos + offset,
            self.s_sym,
            self.t_sym,
        )


def _sort_key(op: EditOp):
    return (_KIND_ORDER[op.kind], op.anchor, op.s_pos or 0, op.t_pos or 0)


@dataclass(frozen=True, slots=True)
class EditScript:
    ops: tuple = ()

    @property
    def cost(self) -> int:
        return len(self.ops)

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def shifted(self, offset: int) -> "EditScript":
        return EditScript(tuple(op.shifted(offset) for op in self.ops))

    def is_canonical(self) -> bool:
        return list(self.ops) == sorted(self.ops, key=_sort_key)


def canonicalize(script: EditScript | Iterable[EditOp]) -> EditScript:
    """Order ops as substitutions, insertions, deletions; ascending anchor within each."""
    ops = script.ops if isinstance(script, EditScript) else tuple(script)
    return EditScript(tuple(sorted(ops, key=_sort_key)))


def apply_script(s_window: Symbols, script: EditScript, origin: int = 1) -> bytes:
    """Rebuild the T side of a window from its S side and an edit script.

    ``origin`` is the stream position of ``s_window[0]``; positions in the
    script are read relative to it. Kept S symbols fill the non-inserted T
    positions in order, so the script is validated as a whole: every op must
    land exactly where it says it does.
    """
    s = as_bytes(s_window)
    m = len(s)
    deleted: set[int] = set()
    subs: dict[int, EditOp] = {}
    inserts: dict[int, EditOp] = {}
    for op in script.ops:
        if op.s_pos is not None:
            i = op.s_pos - origin
            if not 0 <= i < m:
                raise PositionOutOfRange(f"s_pos {op.s_pos} outside window [{origin}, {origin + m - 1}]")
            if s[i] != op.s_sym:
                raise InvalidScript(f"{op.kind} at s_pos {op.s_pos} expects {op.s_sym!r}, window has {s[i]!r}")
            if i in deleted or i in subs:
                raise InvalidScript(f"S position {op.s_pos} edited twice")
            if op.kind == DEL:
                deleted.add(i)
            else:
                subs[i] = op
        if op.kind == INS:
            if op.t_pos in inserts:
                raise InvalidScript(f"T position {op.t_pos} inserted twice")
            inserts[op.t_pos] = op

    n = m - len(deleted) + len(inserts)
    for t_pos in inserts:
        if not origin <= t_pos < origin + n:
            raise PositionOutOfRange(f"t_pos {t_pos} outside result [{origin}, {origin + n - 1}]")

    out = bytearray()
    i = 0
    for j in range(origin, origin + n):
        if j in inserts:
            out.append(inserts[j].t_sym)
            continue
        while i in deleted:
            i += 1
        if i in subs:
            op = subs[i]
            if op.t_pos != j:
                raise InvalidScript(f"substitution at s_pos {op.s_pos} lands on T position {j}, not {op.t_pos}")
            out.append(op.t_sym)
        else:
            out.append(s[i])
        i += 1
    while i in deleted:
        i += 1
    if i != m:
        raise InvalidScript("script leaves S symbols unaligned")
    return bytes(out)


@dataclass(frozen=True)
class NearAlignment:
    """A same-index window pair ``S[start, end]`` / ``T[start, end]`` within budget."""

    start: int
    end: int
    mode: str
    params: dict = field(default_factory=dict)
    script: Optional[EditScript] = None

    @property
    def length(self) -> int:
        return self.end - self.start + 1
