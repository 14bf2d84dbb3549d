"""Command-line interface.

Exit codes: 0 success, 1 verification failures found, 2 usage or input
error, 3 internal invariant breach.  Machine-format output is JSON and
always embeds enough context (n, mode, seed) to reproduce the run.  The
environment variable BRAIDRELAX_OUT names a default directory for benchmark
reports written with --out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import diagram as dg
from . import harness
from .oracle import SearchBoundError, bfs_min_length, is_trivial_braid
from .relax import EngineError, Mode, relax_sigma1, relax_standard
from .words import BraidWord, DomainError, ParseError, parse_word

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _parse_mode(text: str) -> Mode:
    try:
        return Mode(text)
    except ValueError:
        raise DomainError(f"unknown mode {text!r}") from None


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "machine":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_relax(args) -> int:
    word = parse_word(args.word, args.n)
    mode = _parse_mode(args.mode)
    trace = relax_sigma1(word) if mode is Mode.SIGMA1 else relax_standard(word)
    out = trace.output
    lines = [str(out)]
    if args.trace:
        lines.append(f"initial complexity: {trace.initial_complexity}")
        for move, cx in trace.steps:
            mv = " ".join(str(v) for v in move.letter_tuple())
            lines.append(f"move {mv}  -> complexity {cx}")
    payload = {
        "command": "relax",
        "n": args.n,
        "mode": mode.value,
        "input": str(word),
        "output": str(out),
        "output_length": len(out.flatten()),
        "initial_complexity": trace.initial_complexity,
        "steps": [
            {"move": " ".join(str(v) for v in m.letter_tuple()),
             "complexity": cx}
            for m, cx in trace.steps
        ],
    }
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_diagram(args) -> int:
    word = parse_word(args.word, args.n)
    c = dg.diagram_of_word(word)
    cls = dg.sigma1_class(c)
    lines = dg.dump_text(c).splitlines()
    lines.append(f"complexity: {dg.complexity(c)}")
    lines.append(f"sigma1 class: {cls.value}")
    payload = dg.to_machine(c)
    payload.update({
        "command": "diagram",
        "word": str(word),
        "complexity": dg.complexity(c),
        "sigma1_class": cls.value,
    })
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_bench(args) -> int:
    lengths = [int(tok) for tok in args.lengths.split(",") if tok]
    mode = _parse_mode(args.mode)
    records = harness.run_table(
        ns=[args.n], lengths=lengths, samples=args.samples, seed=args.seed,
        mode=mode, jobs=args.jobs)
    failures = sum(rec.failures for rec in records)
    text = harness.csv_text(records)
    if args.out:
        path = args.out
        base = os.environ.get("BRAIDRELAX_OUT")
        if base and not os.path.isabs(path):
            path = os.path.join(base, path)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}")
    elif args.format == "machine":
        payload = {
            "command": "bench",
            "n": args.n,
            "mode": mode.value,
            "seed": args.seed,
            "samples": args.samples,
            "cells": [
                {"n": rec.spec.n, "length": rec.spec.length,
                 "mode": rec.mode.value, "samples": rec.spec.samples,
                 "mean": rec.mean_output_length, "stderr": rec.stderr,
                 "max": rec.max_output_length, "max_ratio": rec.max_ratio,
                 "failures": rec.failures}
                for rec in records
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text)
    return EXIT_FAILURES if failures else EXIT_OK


def _verify_relations(args) -> tuple[int, int]:
    checks = failures = 0
    for index in range(args.samples):
        spec = harness.RandomWordSpec(args.n, args.len, args.samples, args.seed)
        w = harness.random_word(spec, index)
        c = dg.diagram_of_word(w)
        for i in range(1, args.n):
            checks += 1
            back = dg.apply_generator(dg.apply_generator(c, i, 1), i, -1)
            if back != c:
                failures += 1
        for i in range(1, args.n - 1):
            checks += 1
            lhs = c
            for g in (i, i + 1, i):
                lhs = dg.apply_generator(lhs, g, 1)
            rhs = c
            for g in (i + 1, i, i + 1):
                rhs = dg.apply_generator(rhs, g, 1)
            if lhs != rhs:
                failures += 1
        for i in range(1, args.n):
            for j in range(i + 2, args.n):
                checks += 1
                ab = dg.apply_generator(dg.apply_generator(c, i, 1), j, 1)
                ba = dg.apply_generator(dg.apply_generator(c, j, 1), i, 1)
                if ab != ba:
                    failures += 1
    return checks, failures


def _verify_roundtrip(args) -> tuple[int, int]:
    checks = failures = 0
    spec = harness.RandomWordSpec(args.n, args.len, args.samples, args.seed)
    for index in range(args.samples):
        w = harness.random_word(spec, index)
        for fn in (relax_standard, relax_sigma1):
            checks += 1
            trace = fn(w)
            if not is_trivial_braid(w + trace.output.flatten()):
                failures += 1
    return checks, failures


def _verify_descent(args) -> tuple[int, int]:
    checks = failures = 0
    spec = harness.RandomWordSpec(args.n, args.len, args.samples, args.seed)
    for index in range(args.samples):
        w = harness.random_word(spec, index)
        for fn in (relax_standard, relax_sigma1):
            checks += 1
            trace = fn(w)
            comps = trace.complexities()
            ok = all(b < a for a, b in zip(comps, comps[1:]))
            ok = ok and comps[-1] == w.n - 1
            ok = ok and len(trace.steps) <= trace.initial_complexity // 2
            if not ok:
                failures += 1
    return checks, failures


def _verify_lemma52(args) -> tuple[int, int]:
    spec = harness.RandomWordSpec(3, args.len, args.samples, args.seed)
    outputs = []
    for index in range(args.samples):
        w = harness.random_word(spec, index)
        outputs.append(relax_sigma1(w).output)
    report = harness.audit_lemma52(outputs)
    return report.corpus_size, len(report.violations)


def _verify_minlen_b3(args) -> tuple[int, int]:
    checks = failures = 0
    spec = harness.RandomWordSpec(3, args.len, args.samples, args.seed)
    for index in range(args.samples):
        w = harness.random_word(spec, index)
        checks += 1
        cert = bfs_min_length(w, max_radius=max(args.len, 1))
        out_len = len(relax_sigma1(w).output.flatten())
        if out_len != cert.min_length:
            failures += 1
    return checks, failures


_SUITES = {
    "relations": _verify_relations,
    "roundtrip": _verify_roundtrip,
    "descent": _verify_descent,
    "lemma52": _verify_lemma52,
    "minlen-b3": _verify_minlen_b3,
}


def cmd_verify(args) -> int:
    if args.suite not in _SUITES:
        raise DomainError(f"unknown suite {args.suite!r}")
    checks, failures = _SUITES[args.suite](args)
    payload = {
        "command": "verify", "suite": args.suite, "n": args.n,
        "samples": args.samples, "len": args.len, "seed": args.seed,
        "checks": checks, "failures": failures,
    }
    _emit(payload, args.format,
          [f"suite={args.suite} checks={checks} failures={failures}"])
    return EXIT_FAILURES if failures else EXIT_OK


def cmd_minlen(args) -> int:
    word = parse_word(args.word, args.n)
    try:
        cert = bfs_min_length(word, max_radius=args.max_radius)
    except SearchBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURES
    payload = {
        "command": "minlen", "n": args.n, "word": str(word),
        "min_length": cert.min_length, "witness": str(cert.witness),
        "max_radius": args.max_radius,
    }
    _emit(payload, args.format,
          [f"min length: {cert.min_length}", f"witness: {cert.witness}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidrelax",
        description="Greedy relaxation solver for the braid word problem")
    parser.add_argument("--tiebreak", default="canonical",
                        choices=["canonical"],
                        help="tie-breaking rule (only the canonical order "
                             "is implemented)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word=False):
        p.add_argument("--n", type=int, required=True, help="strand count")
        if word:
            p.add_argument("--word", required=True,
                           help="whitespace-separated signed indices")
        p.add_argument("--format", default="text",
                       choices=["text", "machine"])

    p = sub.add_parser("relax", help="untangle a braid word")
    common(p, word=True)
    p.add_argument("--mode", default="standard",
                   choices=[m.value for m in Mode])
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=cmd_relax)

    p = sub.add_parser("diagram", help="show the curve-diagram coding")
    common(p, word=True)
    p.set_defaults(fn=cmd_diagram)

    p = sub.add_parser("bench", help="random-corpus statistics table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lengths", required=True,
                   help="comma-separated word lengths")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--mode", default="standard",
                   choices=[m.value for m in Mode])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", default="csv",
                   choices=["csv", "machine"])
    p.add_argument("--out", default=None,
                   help="write CSV to this file (relative paths resolve "
                        "against $BRAIDRELAX_OUT)")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--len", type=int, default=12)
    p.add_argument("--maxlen", type=int, dest="len",
                   help="alias for --len")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", default="text", choices=["text", "machine"])
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("minlen", help="exact minimal length in B_3")
    common(p, word=True)
    p.add_argument("--max-radius", type=int, default=12)
    p.set_defaults(fn=cmd_minlen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EngineError, dg.IntegrityError, dg.ContractError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
