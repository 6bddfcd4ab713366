"""Longest same-index near-alignment of two synchronized streams under edit distance."""
from .core import (
    EXCEEDED,
    EditOp,
    EditScript,
    Exceeded,
    NearAlignment,
    SymbolPair,
    apply_script,
    canonicalize,
)
from .approx import AdditiveApprox, MultiplicativeApprox
from .exact import ExactEngine, detect_run
from .hardgen import s_transform, sample_ham_pair, t_transform
from .hirschberg import banded_distance, modified_hirschberg, smallest_feasible_start
from .oracle import full_edit_distance, hamming, oracle_lmax
from .sketch import BandedSketch

__all__ = [
    "EXCEEDED",
    "AdditiveApprox",
    "MultiplicativeApprox",
    "BandedSketch",
    "EditOp",
    "EditScript",
    "ExactEngine",
    "Exceeded",
    "NearAlignment",
    "SymbolPair",
    "apply_script",
    "banded_distance",
    "canonicalize",
    "detect_run",
    "full_edit_distance",
    "hamming",
    "modified_hirschberg",
    "oracle_lmax",
    "s_transform",
    "sample_ham_pair",
    "smallest_feasible_start",
    "t_transform",
]
