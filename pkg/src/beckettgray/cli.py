"""Command-line entry point: verify, canonicalize, enumerate, estimate,
hunt, brgc, selfcheck.

Exit codes: 0 success, 1 verification-negative, 2 usage error,
3 truncated by budget.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import Iterable, Optional

from . import anneal as anneal_mod
from . import estimate as estimate_mod
from .beckett import BeckettKind, BeckettViolationError, classify_beckett, queue_trace
from .canonical import are_isomorphic_beckett, canonicalize
from .core import (
    MalformedSequenceError,
    TransitionSequence,
    format_symbols,
    parse_symbols,
)
from .fixtures import self_check
from .search import (
    EnumerationReport,
    SearchConfig,
    enumerate_beckett,
    split_prefixes,
)
from .stacks import brgc, two_stack_trace

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3


def _input_sequences(n: int, args_seqs: list[str]) -> Iterable[TransitionSequence]:
    lines = args_seqs if args_seqs else (ln.strip() for ln in sys.stdin)
    for line in lines:
        if not line or line.startswith("#") or line.startswith("n="):
            continue
        yield parse_symbols(n, line)


def _cmd_verify(args) -> int:
    code = EXIT_OK
    for seq in _input_sequences(args.n, args.sequence):
        cls = classify_beckett(seq)
        if args.json:
            doc = {"sequence": str(seq), "classification": cls.kind.value}
            if cls.violation:
                doc["violation"] = str(cls.violation)
            if cls.repeat_index is not None:
                doc["repeat_index"] = cls.repeat_index
            print(json.dumps(doc))
        else:
            print(f"{seq}\t{cls}")
            if args.trace and cls.kind is not BeckettKind.NOT_BECKETT:
                try:
                    for i, state in enumerate(queue_trace(seq)):
                        print(f"  step {i}: {','.join(map(str, state)) or 'empty'}")
                except BeckettViolationError as e:
                    print(f"  trace stops: {e}")
        if cls.kind not in (BeckettKind.OPEN, BeckettKind.CYCLIC):
            code = EXIT_NEGATIVE
    return code


def _cmd_canonicalize(args) -> int:
    for seq in _input_sequences(args.n, args.sequence):
        canon = canonicalize(seq)
        print(format_symbols(args.n, canon.symbols))
        if args.witness:
            witness = are_isomorphic_beckett(seq, canon)
            if witness is None:
                print("  witness: none (canonical image differs from any "
                      "zero-anchored relabeling)")
            else:
                print(
                    f"  rho={','.join(map(str, witness.rho))} "
                    f"reversed={witness.reversed} "
                    f"rotation={witness.rotation} added_word={witness.added_word}"
                )
    return EXIT_OK


def _run_shard(config: SearchConfig) -> tuple[str, EnumerationReport, list[tuple[str, str]]]:
    emitted: list[tuple[str, str]] = []
    report = enumerate_beckett(config, lambda kind, seq: emitted.append((kind, str(seq))))
    prefix = "" if config.prefix is None else str(config.prefix)
    return prefix, report, emitted


def _read_checkpoint(path: str) -> set[str]:
    done = set()
    if os.path.exists(path):
        with open(path) as fp:
            for line in fp:
                if line.startswith("shard="):
                    done.add(line.split()[0].split("=", 1)[1])
    return done


def _cmd_enumerate(args) -> int:
    mode = args.mode
    prefix = parse_symbols(args.n, args.prefix) if args.prefix else None
    base = SearchConfig(
        n=args.n,
        mode=mode,
        prefix=prefix,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        emit="count-only" if args.count_only else "canonical-codes",
    )
    out = open(args.out, "a") if args.out else None

    def emit_line(text: str) -> None:
        print(text)
        if out:
            out.write(text + "\n")
            out.flush()

    if args.jobs > 1 or args.depth:
        depth = args.depth or 4
        shards = split_prefixes(args.n, depth)
        done = _read_checkpoint(args.out) if args.out else set()
        pending = []
        for shard in shards:
            cfg = SearchConfig(
                n=args.n, mode=mode, prefix=shard.prefix,
                node_limit=args.node_limit, time_limit=args.time_limit,
                emit=base.emit,
            )
            if str(cfg.prefix) not in done:
                pending.append(cfg)
        total = EnumerationReport(n=args.n, mode=mode)
        emit_line(f"n={args.n} mode={mode}")
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for prefix_str, report, emitted in pool.map(_run_shard, pending):
                for kind, text in emitted:
                    emit_line(text)
                emit_line(
                    f"shard={prefix_str} cyclic={report.count_cyclic} "
                    f"open_total={report.count_open_total} "
                    f"open_strict={report.count_open_strict} "
                    f"nodes={report.nodes_visited} truncated={report.truncated}"
                )
                total = total.merge(report)
        report = total
    else:
        emit_line(f"n={args.n} mode={mode}")
        report = enumerate_beckett(base, lambda kind, seq: emit_line(str(seq)))

    doc = asdict(report)
    if args.json:
        emit_line(json.dumps(doc))
    else:
        emit_line("# " + " ".join(f"{k}={v}" for k, v in doc.items()))
    if out:
        out.close()
    return EXIT_TRUNCATED if report.truncated else EXIT_OK


def _cmd_estimate(args) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2**32)
    if args.seed is None:
        print(f"seed={seed} (auto-chosen)")
    config = SearchConfig(n=args.n, mode=args.mode)
    report = estimate_mod.estimate_tree_size(config, args.samples, seed)
    if args.json:
        print(json.dumps(asdict(report)))
    else:
        for k, v in asdict(report).items():
            print(f"{k}={v}")
    return EXIT_OK


def _cmd_hunt(args) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().randrange(2**32)
    if args.seed is None:
        print(f"seed={seed} (auto-chosen)")
    config = anneal_mod.AnnealConfig(
        n=args.n,
        mode=args.mode,
        rng_seed=seed,
        restarts=args.restarts,
        completion_budget=args.budget,
        seed_handoff_length=args.handoff,
    )
    result = anneal_mod.hunt(config)
    if result.found is not None:
        print(f"n={args.n} mode={args.mode}")
        print(format_symbols(args.n, result.found.symbols))
        if args.out:
            with open(args.out, "a") as fp:
                fp.write(f"n={args.n} mode={args.mode}\n")
                fp.write(format_symbols(args.n, result.found.symbols) + "\n")
    print(
        f"# found={result.found is not None} "
        f"best_partial_length={result.best_partial_length} "
        f"attempts={result.attempts} elapsed={result.elapsed:.2f} "
        f"seed={result.rng_seed} winning_seed={result.winning_seed}"
    )
    return EXIT_OK if result.found is not None else EXIT_NEGATIVE


def _cmd_brgc(args) -> int:
    path = brgc(args.n)
    if args.trace:
        states = two_stack_trace(path)
        for word, state in zip(path.words, states):
            print(f"{word:0{args.n}b}  {state}")
    else:
        for word in path.words:
            print(f"{word:0{args.n}b}")
    return EXIT_OK


def _cmd_selfcheck(args) -> int:
    failed = 0
    for check in self_check():
        status = "PASS" if check.passed else "FAIL"
        note = "" if check.canonical else " (not class-least)"
        print(f"{status} {check.label}: {check.classified}{note}")
        if not check.passed:
            failed += 1
    print(f"# {failed} failures")
    return EXIT_OK if failed == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beckettgray",
        description="Generate, verify, enumerate, estimate and hunt Beckett-Gray codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="classify transition sequences")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("sequence", nargs="*", help="sequences (default: stdin)")
    p.add_argument("--trace", action="store_true", help="print the queue trace")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("canonicalize", help="print canonical forms")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("sequence", nargs="*")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_canonicalize)

    p = sub.add_parser("enumerate", help="exhaustively enumerate codes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=["cyclic", "open", "both"], default="both")
    p.add_argument("--prefix", help="root the search at this partial sequence")
    p.add_argument("--jobs", type=int, default=int(os.environ.get("BECKETTGRAY_JOBS", 1)))
    p.add_argument("--depth", type=int, help="prefix-shard depth for parallel runs")
    p.add_argument("--out", help="append codes, shard checkpoints and report here")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("estimate", help="Monte-Carlo search-tree size estimate")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=["cyclic", "open", "both"], default="both")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("hunt", help="anneal + backtrack search for a code")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=["cyclic", "open"], default="cyclic")
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int, default=30_000)
    p.add_argument("--budget", type=int, default=300_000)
    p.add_argument("--handoff", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hunt)

    p = sub.add_parser("brgc", help="print the binary reflected Gray code")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="show the two-stack states")
    p.set_defaults(func=_cmd_brgc)

    p = sub.add_parser("selfcheck", help="verify the bundled published codes")
    p.set_defaults(func=_cmd_selfcheck)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except MalformedSequenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("# truncated by interrupt", file=sys.stderr)
        return EXIT_TRUNCATED


if __name__ == "__main__":
    sys.exit(main())
