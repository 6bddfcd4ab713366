"""near-align: longest same-index window pair within edit distance d.

Reads two equal-length byte streams in lockstep and prints one JSON line.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .approx import AdditiveApprox, MultiplicativeApprox
from .core import DEL, INS, LengthMismatch, NearAlignError, NearAlignment
from .exact import ExactEngine
from .hardgen import s_transform, sample_ham_pair, t_transform
from .oracle import full_edit_distance, hamming, oracle_lmax

CHUNK = 1 << 16
SEED_ENV = "NEAR_ALIGN_SEED"


def iter_pairs(s_path=None, t_path=None, paired=None, chunk: int = CHUNK):
    """Yield ``(s_chunk, t_chunk)`` of equal length, reading both sources in lockstep."""
    if paired is not None:
        with open(paired, "rb") as fh:
            while True:
                block = fh.read(2 * chunk)
                if not block:
                    return
                if len(block) % 2:
                    more = fh.read(1)
                    if not more:
                        raise LengthMismatch("paired input has an odd number of bytes")
                    block += more
                yield block[0::2], block[1::2]
    with open(s_path, "rb") as fs, open(t_path, "rb") as ft:
        while True:
            a = fs.read(chunk)
            b = ft.read(chunk)
            # short reads only happen at end of file for regular files
            if len(a) != len(b):
                tail_a = a + fs.read()
                tail_b = b + ft.read()
                if len(tail_a) != len(tail_b):
                    raise LengthMismatch("S and T streams differ in length")
                a, b = tail_a, tail_b
            if not a:
                return
            yield a, b


def _char(sym: int) -> str:
    return bytes([sym]).decode("latin-1")


def edits_to_json(script) -> list[dict]:
    """Ops in stream order (by anchor), which reads like a diff."""
    out = []
    for op in sorted(script.ops, key=lambda op: (op.anchor, op.s_pos or 0, op.t_pos or 0)):
        if op.kind == DEL:
            out.append({"op": "del", "s_pos": op.s_pos, "s_char": _char(op.s_sym)})
        elif op.kind == INS:
            out.append({"op": "ins", "t_pos": op.t_pos, "t_char": _char(op.t_sym)})
        else:
            out.append(
                {"op": "sub", "s_pos": op.s_pos, "t_pos": op.t_pos, "s_char": _char(op.s_sym), "t_char": _char(op.t_sym)}
            )
    return out


def to_json(mode: str, result: NearAlignment | None) -> str:
    if result is None:
        doc = {"mode": mode, "length": 0}
    else:
        doc = {
            "mode": mode,
            "length": result.length,
            "start": result.start,
            "end": result.end,
            "edits": edits_to_json(result.script) if result.script is not None else None,
            "params": result.params,
        }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def _inputs(args) -> dict:
    if args.paired is not None:
        if args.s is not None or args.t is not None:
            raise NearAlignError("use either --paired or --s/--t, not both")
        return {"paired": args.paired}
    if args.s is None or args.t is None:
        raise NearAlignError("both --s and --t are required (or --paired)")
    return {"s_path": args.s, "t_path": args.t}


def _engine(args, executor):
    if args.command == "exact":
        return ExactEngine(args.d, recompute_always=args.mode == "recompute-always", executor=executor)
    if args.command == "approx-mult":
        return MultiplicativeApprox(args.d, args.epsilon, executor=executor)
    return AdditiveApprox(args.d, args.error, executor=executor)


def _stream_stats(engine, symbols: int, seconds: float) -> dict:
    st = engine.stats
    doc = {"symbols": symbols, "seconds": round(seconds, 6)}
    doc["us_per_symbol"] = round(1e6 * seconds / symbols, 3) if symbols else 0.0
    if isinstance(engine, ExactEngine):
        doc.update(
            max_window=st.max_window,
            max_window_within_budget=st.max_window_within_budget,
            max_carried_anchors=st.max_carried,
            hirschberg_calls=st.hirschberg_calls,
            cuts=st.cuts,
            # window buffers plus the d+1 symbols each carried sketch keeps
            max_symbols_held=st.max_window + st.max_carried * (engine.d + 1),
        )
    else:
        doc.update(
            max_live_checkpoints=st.max_live_checkpoints,
            max_level_entries=st.max_level_entries,
            max_live_sketches=st.max_sketches,
            sketch_count=st.sketches_created,
            levels=st.levels,
            max_symbols_held=st.max_sketches * (engine.d + 1),
        )
    return doc


def run_stream(args) -> tuple[str, dict]:
    executor = ThreadPoolExecutor(max_workers=args.threads) if args.threads > 1 else None
    try:
        engine = _engine(args, executor)
        n = 0
        t0 = time.perf_counter()
        for a, b in iter_pairs(chunk=args.chunk, **_inputs(args)):
            engine.feed(a, b)
            n += len(a)
        elapsed = time.perf_counter() - t0
    finally:
        if executor is not None:
            executor.shutdown()
    return to_json(engine.mode, engine.result()), _stream_stats(engine, n, elapsed)


def run_oracle(args) -> tuple[str, dict]:
    s = bytearray()
    t = bytearray()
    for a, b in iter_pairs(chunk=args.chunk, **_inputs(args)):
        s += a
        t += b
    t0 = time.perf_counter()
    found = oracle_lmax(s, t, args.d)
    result = None
    if found is not None:
        _, start, end = found
        _, script = full_edit_distance(s[start - 1 : end], t[start - 1 : end])
        result = NearAlignment(start, end, "oracle", {"d": args.d}, script.shifted(start - 1))
    return to_json("oracle", result), {"symbols": len(s), "seconds": round(time.perf_counter() - t0, 6)}


def _resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise NearAlignError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def generate(kind: str, n: int, d: int, seed: int) -> tuple[bytes, bytes, int]:
    x, y = sample_ham_pair(n, d, seed)
    ham = hamming(x, y)
    if kind == "ham-pair":
        return x, y, ham
    sx, sy = s_transform(x, d), s_transform(y, d)
    if kind == "s-pair":
        return sx, sy, ham
    return t_transform(sx, d, len(sx)), t_transform(sy, d, len(sy)), ham


def run_gen(args) -> str:
    seed = _resolve_seed(args.seed)
    s, t, ham = generate(args.kind, args.n, args.d, seed)
    out = Path(args.out)
    s_file = out.with_name(out.name + ".s")
    t_file = out.with_name(out.name + ".t")
    s_file.write_bytes(s)
    t_file.write_bytes(t)
    manifest = {
        "kind": args.kind,
        "n": args.n,
        "d": args.d,
        "seed": seed,
        "lengths": {"s": len(s), "t": len(t)},
        "ham": ham,
        "files": {"s": str(s_file), "t": str(t_file)},
    }
    return json.dumps(manifest, separators=(",", ":"))


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="near-align", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def stream_args(p):
        p.add_argument("--d", type=int, required=True, help="edit budget")
        p.add_argument("--s", type=Path, help="file holding stream S")
        p.add_argument("--t", type=Path, help="file holding stream T")
        p.add_argument("--paired", type=Path, help="one file of interleaved (S, T) byte pairs")
        p.add_argument("--threads", type=_positive_int, default=1, help="workers for per-sketch updates")
        p.add_argument("--chunk", type=_positive_int, default=CHUNK, help="bytes read per stream per chunk")
        p.add_argument("--stats", action="store_true", help="print structural counters to stderr as JSON")

    p = sub.add_parser("exact", help="exact longest d-near-alignment with its edit script")
    stream_args(p)
    p.add_argument("--mode", choices=["cached", "recompute-always"], default="cached")
    p = sub.add_parser("approx-mult", help="(1+epsilon)-approximate length")
    stream_args(p)
    p.add_argument("--epsilon", type=float, required=True)
    p = sub.add_parser("approx-add", help="length within an additive error E")
    stream_args(p)
    p.add_argument("--error", type=int, required=True, help="checkpoint spacing E")
    p = sub.add_parser("oracle", help="brute-force reference (loads both inputs)")
    stream_args(p)

    p = sub.add_parser("gen", help="write a hard instance pair and print its manifest")
    p.add_argument("--kind", choices=["ham-pair", "s-pair", "t-pair"], required=True)
    p.add_argument("--n", type=int, required=True, help="length of the underlying bit strings")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV}, then 0")
    p.add_argument("--out", required=True, help="output prefix; writes <out>.s and <out>.t")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            print(run_gen(args))
            return 0
        if args.d < 0:
            raise NearAlignError(f"--d must be >= 0, got {args.d}")
        line, stats = run_oracle(args) if args.command == "oracle" else run_stream(args)
    except (NearAlignError, OSError) as exc:
        print(f"near-align: error: {exc}", file=sys.stderr)
        return 2
    print(line)
    if args.stats:
        print(json.dumps(stats, separators=(",", ":")), file=sys.stderr)
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
