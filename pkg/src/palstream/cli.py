"""Command-line front end: run, verify, gen, and bench subcommands.

All machine-readable output (JSON or JSONL) goes to standard output;
diagnostics go to standard error.  Exit codes: 0 success, 2 usage or guard
violation, 3 verification failure.

Error parameters are interpreted against palindrome lengths of the
original text; internally every symbol is fed twice so that odd and even
palindromes alike appear as even-radius palindromes of the doubled text
(``--odd even-only`` switches the doubling off, after which only even
palindromes of the raw text are reported).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Iterable

from .engine_basic import BasicEngine, symbol_codes
from .engine_compressed import CompressedEngine, compressed_engine
from .genlib import generate
from .oracle import prefix_longest
from .schemes import (
    SchemeConfig,
    additive_config,
    multiplicative_config,
    sparse_config,
)

ORACLE_GUARD = 1 << 13  # per-prefix verification is quadratic in spirit


def _fail(msg: str, code: int = 2) -> None:
    print(msg, file=sys.stderr)
    raise SystemExit(code)


def _config(args) -> SchemeConfig:
    n = args.n
    if args.scheme == "sparse":
        if args.mode != "multiplicative" or args.eps is None or args.eps < 1:
            _fail("--scheme sparse needs --mode multiplicative and --eps >= 1")
        if getattr(args, "engine", "basic") not in ("basic", None):
            _fail("--scheme sparse runs on the basic engine only")
        return sparse_config(n, args.eps)
    if args.mode == "additive":
        if args.error is None:
            _fail("--mode additive needs --error")
        return additive_config(n, args.error)
    if args.eps is None:
        _fail("--mode multiplicative needs --eps")
    return multiplicative_config(n, args.eps)


def _make_engine(kind: str, cfg: SchemeConfig, seed: int):
    if kind == "basic":
        return BasicEngine(cfg, seed)
    return compressed_engine(cfg, seed)


def _read_symbols(args) -> list[int]:
    if args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as fh:
            data = fh.read()
    data = data.rstrip(b"\n")
    if args.tokens == "lines":
        return [hash(line) % ((1 << 31) - 1) + 1 for line in data.split(b"\n")]
    return symbol_codes(data)


def _feed(engine, codes: Iterable[int], doubled: bool) -> list[int]:
    """Per-symbol answers in original-text length units."""
    push = engine.push
    out = []
    if doubled:
        for a in codes:
            push(a)
            out.append(push(a))
    else:
        for a in codes:
            out.append(2 * push(a))
    return out


# -- run -------------------------------------------------------------------


def cmd_run(args) -> int:
    codes = _read_symbols(args)
    if args.n is None:
        args.n = max(len(codes), 1)
    if len(codes) > args.n:
        _fail(f"input has {len(codes)} symbols, more than --n {args.n}")
    cfg = _config(args)
    engines = ["basic", "compressed"] if args.engine == "both" else [args.engine]
    if args.emit == "per-char" and len(engines) > 1:
        _fail("--emit per-char needs a single engine")
    doubled = args.odd == "double"
    for kind in engines:
        engine = _make_engine(kind, cfg, args.seed)
        t0 = time.perf_counter()
        answers = _feed(engine, codes, doubled)
        wall = time.perf_counter() - t0
        if args.emit == "per-char":
            out = sys.stdout
            for j, ans in enumerate(answers, start=1):
                out.write(f'{{"h": {j}, "answer": {ans}}}\n')
            continue
        # wall time goes to stderr so stdout stays byte-identical per seed
        print(f"{kind}: wall_time_s={wall:.6f}", file=sys.stderr)
        report = {
            "n": len(codes),
            "mode": cfg.kind,
            "engine": kind,
            "answer": answers[-1] if answers else 0,
        }
        if args.opt:
            if len(codes) > ORACLE_GUARD:
                _fail(f"--opt is limited to inputs of length {ORACLE_GUARD}")
            opts = prefix_longest(codes)
            report["opt"] = opts[-1] if opts else 0
        if args.telemetry:
            report["peak_words"] = engine.peak_words()
            report["checks"] = engine.checks
            if hasattr(engine, "densifies"):
                report["densifies"] = engine.densifies
        print(json.dumps(report))
    return 0


# -- verify ------------------------------------------------------------------


def _gen_case(kind: str, rng: random.Random, max_len: int) -> str:
    n = rng.randrange(1, max_len + 1)
    if kind == "mixed":
        kind = rng.choice(["random", "periodic", "nu", "planted", "morphism"])
    spec: dict = {"kind": kind, "length": n, "seed": rng.randrange(1 << 30)}
    if kind == "random":
        spec["k"] = rng.choice([2, 2, 4, 26])
    elif kind == "periodic":
        k = rng.choice([2, 3])
        spec["period"] = "".join(
            rng.choice("abc"[:k]) for _ in range(rng.randrange(1, 6))
        )
    elif kind == "planted":
        spec["k"] = rng.choice([2, 4])
        spec["pal_len"] = rng.randrange(1, n + 1)
        spec["pal_pos"] = rng.randrange(0, n - spec["pal_len"] + 1)
    elif kind == "morphism":
        sigma = rng.choice([2, 3, 4])
        src_len = max(1, n // (2 * sigma + 6))
        spec["sigma"] = sigma
        spec["source"] = "".join(
            chr(ord("a") + rng.randrange(sigma)) for _ in range(src_len)
        )
    return generate(spec)


def cmd_verify(args) -> int:
    if args.max_len > ORACLE_GUARD:
        _fail(f"--max-len above the oracle guard {ORACLE_GUARD}")
    args.n = args.max_len
    cfg = _config(args)
    engines = ["basic", "compressed"] if args.engines == "both" else [args.engines]
    if cfg.kind == "sparse" and "compressed" in engines:
        _fail("--scheme sparse runs on the basic engine only")
    rng = random.Random(args.seed)
    violations = 0
    worst_gap = 0
    worst_ratio = 1.0
    for trial in range(args.trials):
        text = _gen_case(args.kind, rng, args.max_len)
        if not text:
            continue
        opts = prefix_longest(text)
        codes = symbol_codes(text)
        for kind in engines:
            engine = _make_engine(kind, cfg, rng.randrange(1 << 30))
            answers = _feed(engine, codes, doubled=True)
            for ans, opt in zip(answers, opts):
                ok = ans <= opt
                if cfg.kind == "additive":
                    ok = ok and opt - ans <= cfg.param
                    worst_gap = max(worst_gap, opt - ans)
                else:
                    ok = ok and (opt == 0 or ans > 0 and opt <= (1 + cfg.param) * ans)
                    if ans > 0:
                        worst_ratio = max(worst_ratio, opt / ans)
                if not ok:
                    violations += 1
    report = {
        "trials": args.trials,
        "engines": engines,
        "mode": cfg.kind,
        "violations": violations,
        "worst_gap": worst_gap,
        "worst_ratio": round(worst_ratio, 6),
    }
    print(json.dumps(report))
    return 0 if violations == 0 else 3


# -- gen -----------------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        spec = json.loads(args.spec)
        text = generate(spec)
    except (ValueError, KeyError) as exc:
        _fail(f"bad generator spec: {exc}")
    sys.stdout.write(text + "\n")
    return 0


# -- bench -----------------------------------------------------------------------


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)
    for n in sizes:
        if args.kind == "periodic":
            text = ("ab" * n)[:n]
        else:
            text = "".join(rng.choice("ab") for _ in range(n))
        args.n = n
        cfg = _config(args)
        codes = symbol_codes(text)
        engine = _make_engine(args.engine, cfg, args.seed)
        t0 = time.perf_counter()
        answers = _feed(engine, codes, doubled=True)
        wall = time.perf_counter() - t0
        print(json.dumps({
            "n": n,
            "kind": args.kind,
            "engine": args.engine,
            "answer": answers[-1] if answers else 0,
            "wall_time_s": round(wall, 4),
            "pushes_per_s": round(2 * n / wall) if wall else None,
            "peak_words": engine.peak_words(),
            "checks": engine.checks,
        }))
    return 0


# -- argument plumbing -----------------------------------------------------------


def _add_scheme_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=["additive", "multiplicative"], required=True)
    p.add_argument("--error", type=int, help="additive error E")
    p.add_argument("--eps", type=float, help="multiplicative error factor 1+eps")
    p.add_argument("--scheme", choices=["auto", "sparse"], default="auto")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="palstream", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("run", help="stream an input and report answers")
    _add_scheme_flags(p)
    p.add_argument("--engine", choices=["basic", "compressed", "both"],
                   default="compressed")
    p.add_argument("--input", default="-", help="path or - for stdin")
    p.add_argument("--n", type=int, help="maximum input length guard")
    p.add_argument("--emit", choices=["final", "per-char"], default="final")
    p.add_argument("--telemetry", action="store_true")
    p.add_argument("--opt", action="store_true",
                   help="also compute the exact value offline")
    p.add_argument("--odd", choices=["double", "even-only"], default="double")
    p.add_argument("--tokens", choices=["bytes", "lines"], default="bytes")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("verify", help="compare engines against the exact oracle")
    _add_scheme_flags(p)
    p.add_argument("--engines", choices=["basic", "compressed", "both"],
                   default="both")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-len", type=int, default=2048)
    p.add_argument("--kind",
                   choices=["mixed", "random", "periodic", "nu", "planted",
                            "morphism"],
                   default="mixed")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="emit a deterministic test text")
    p.add_argument("--spec", required=True, help="generator spec as JSON")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("bench", help="time an engine on synthetic inputs")
    _add_scheme_flags(p)
    p.add_argument("--engine", choices=["basic", "compressed"],
                   default="compressed")
    p.add_argument("--kind", choices=["random", "periodic"], default="random")
    p.add_argument("--sizes", default="65536,131072",
                   help="comma-separated input lengths")
    p.set_defaults(fn=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
