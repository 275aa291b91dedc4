"""Command-line front end: tabulate counts, verify formulas, inspect structures.

Subcommands
    counts <n>            residue-class counts for one n (formula-first)
    verify --max-n N      formula-vs-oracle checks up to N, exit 1 on mismatch
    tower <partition>     render the 2-core tower and its row weights
    parents <partition> --r R   list hook-addition parents with sign data
    alt <n>               alternating-group counts for one n
    bench --max-n N       throughput of the odd stream vs the full sweep

Exit codes: 0 success, 1 verification mismatch, 2 usage error.  The
environment variable DIMLAB_ORACLE_BOUND overrides the default oracle
bound; --oracle-bound overrides both.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
import time
from typing import Sequence

from . import alternating, enumeration
from .binary_arith import is_sparse
from .core_towers import render_tower, row_weights, tower
from .enumeration import DEFAULT_ORACLE_BOUND
from .errors import SizeLimitError
from .parents import all_parents, sign_flip_parity, predict_parent_sign
from .partitions import Partition, dim_mod4, ENUMERATION_LIMIT, enumerate_partitions


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _default_bound() -> int:
    raw = os.environ.get("DIMLAB_ORACLE_BOUND")
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"DIMLAB_ORACLE_BOUND must be an integer, got {raw!r}")
    if value < 1:
        raise SystemExit(f"DIMLAB_ORACLE_BOUND must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimlab",
        description="Partition counts by dimension residue mod 4, with verification tools.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=("csv", "json", "text"), default="text",
        help="output encoding (default text)",
    )
    shared.add_argument(
        "--oracle-bound", type=_positive_int, default=None, metavar="B",
        help="largest n the brute-force sweep may touch (default from "
             "DIMLAB_ORACLE_BOUND or 40)",
    )
    shared.add_argument(
        "--header", action="store_true",
        help="with --format csv, print the schema header line first",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p_counts = sub.add_parser("counts", parents=[shared], help="residue-class counts for n")
    p_counts.add_argument("n", type=_positive_int)

    p_verify = sub.add_parser("verify", parents=[shared], help="formula-vs-oracle checks")
    p_verify.add_argument("--max-n", type=_positive_int, required=True, metavar="N")

    p_tower = sub.add_parser("tower", parents=[shared], help="2-core tower of a partition")
    p_tower.add_argument("partition", type=_partition_arg, help="comma form, e.g. 6,5,4,2,1,1")

    p_parents = sub.add_parser("parents", parents=[shared], help="hook-addition parents of a core")
    p_parents.add_argument("partition", type=_partition_arg, help="the core, comma form")
    p_parents.add_argument("--r", type=_positive_int, required=True, metavar="R",
                           help="hooks have length 2^R")

    p_alt = sub.add_parser("alt", parents=[shared], help="alternating-group counts for n")
    p_alt.add_argument("n", type=_positive_int)

    p_bench = sub.add_parser("bench", parents=[shared], help="odd stream vs full sweep timing")
    p_bench.add_argument("--max-n", type=_positive_int, required=True, metavar="N")

    return parser


def _emit_report(fields: dict, header: str, fmt: str, want_header: bool) -> None:
    if fmt == "json":
        print(json.dumps(fields))
    elif fmt == "csv":
        if want_header:
            print(header)
        print(",".join(str(v) for v in fields.values()))
    else:
        for key, value in fields.items():
            print(f"{key} = {value}")


def _cmd_counts(args: argparse.Namespace, bound: int) -> int:
    report = enumeration.formula_counts(args.n, bound)
    _emit_report(dataclasses.asdict(report), enumeration.CSV_HEADER, args.format, args.header)
    return 0


def _cmd_alt(args: argparse.Namespace, bound: int) -> int:
    report = alternating.formula_alt_counts(args.n, bound)
    _emit_report(dataclasses.asdict(report), alternating.ALT_CSV_HEADER, args.format, args.header)
    return 0


def _cmd_tower(args: argparse.Namespace) -> int:
    t = tower(args.partition)
    weights = row_weights(t)
    if args.format == "json":
        print(json.dumps({
            "partition": str(args.partition),
            "rows": [[str(node) for node in row] for row in t.rows],
            "weights": list(weights),
        }))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        if args.header:
            writer.writerow(["partition", "weights", "depth"])
        writer.writerow([str(args.partition), ",".join(map(str, weights)), t.depth])
        sys.stdout.write(out.getvalue())
    else:
        for line in render_tower(t):
            print(line)
        print("w = " + ",".join(map(str, weights)))
    return 0


def _cmd_parents(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    core = args.partition
    if core.size >= 1 << args.r:
        parser.error(f"core size {core.size} must be below 2^{args.r} = {1 << args.r}")
    rows = []
    core_sign = dim_mod4(core).sign
    for rec in all_parents(core, args.r):
        eta = sign_flip_parity(rec)
        actual = dim_mod4(rec.parent).sign
        predicted = predict_parent_sign(rec, core_sign) if rec.parent.size > 3 else None
        rows.append({
            "parent": str(rec.parent),
            "kind": rec.kind,
            "param": rec.param,
            "affected": rec.affected,
            "eta": eta,
            "predicted": predicted,
            "actual": actual,
        })
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        if args.header:
            writer.writerow(["parent", "kind", "param", "affected", "eta", "predicted", "actual"])
        for row in rows:
            writer.writerow(["" if v is None else v for v in row.values()])
        sys.stdout.write(out.getvalue())
    else:
        for row in rows:
            pred = "?" if row["predicted"] is None else f"{row['predicted']:+d}"
            print(f"kind {row['kind']}  param {row['param']:>3}  affected {row['affected']:>3}  "
                  f"eta {row['eta']}  predicted {pred}  actual {row['actual']:+d}  "
                  f"parent {row['parent']}")
    return 0


def _verify_suites(max_n: int, bound: int):
    """Yield (suite name, list of mismatch descriptions) pairs."""
    oracle = {n: enumeration.oracle_counts(n, bound) for n in range(1, max_n + 1)}

    bad = [f"n={n}: formula {enumeration.count_odd(n)} oracle {rep.a}"
           for n, rep in oracle.items() if enumeration.count_odd(n) != rep.a]
    yield "odd-count formula", bad

    bad = [f"n={n}: formula {enumeration.a2(n)} oracle {rep.a2}"
           for n, rep in oracle.items() if enumeration.a2(n) != rep.a2]
    yield "residue-two recursion", bad

    bad = [f"n={n}: formula {enumeration.m4(n)} oracle {rep.m4}"
           for n, rep in oracle.items() if enumeration.m4(n) != rep.m4]
    yield "not-divisible-by-four count", bad

    bad = []
    for n, rep in oracle.items():
        value, status = enumeration.delta(n, bound)
        if status == enumeration.EXACT and value != rep.delta:
            bad.append(f"n={n}: formula {value} oracle {rep.delta}")
    yield "signed count (proved cases)", bad

    bad = []
    for n, rep in oracle.items():
        if is_sparse(n) and enumeration.delta_sparse(n) != rep.delta:
            bad.append(f"n={n}: closed form {enumeration.delta_sparse(n)} oracle {rep.delta}")
    yield "sparse closed form", bad

    bad = []
    for n in range(4, max_n + 1):
        r = n.bit_length() - 1
        m = n - (1 << r)
        if 0 < m < 1 << (r - 1):
            want = 0 if n % 2 == 0 else 4 * oracle[m].delta
            if oracle[n].delta != want:
                bad.append(f"n={n}: oracle {oracle[n].delta} recursion {want}")
    yield "main recursion", bad

    known = {3: (2, 0), 6: (8, 0), 12: (16, 16), 24: (64, 64)}
    bad = [f"n={n}: oracle ({oracle[n].a1},{oracle[n].a3}) expected {want}"
           for n, want in known.items() if n <= max_n and (oracle[n].a1, oracle[n].a3) != want]
    yield "leading-11 values", bad

    bad = []
    for n in range(3, min(max_n, alternating.DEFAULT_ALT_ORACLE_BOUND) + 1):
        rep = alternating.alternating_oracle(n)
        if alternating.hat_m2(n) != rep.m2_hat:
            bad.append(f"n={n}: hat_m2 {alternating.hat_m2(n)} oracle {rep.m2_hat}")
        if alternating.a_circ(n) != rep.a_circ:
            bad.append(f"n={n}: a_circ {alternating.a_circ(n)} oracle {rep.a_circ}")
        value, status = alternating.delta_circ(n, bound)
        if status == enumeration.EXACT and value != rep.delta_circ:
            bad.append(f"n={n}: delta_circ {value} oracle {rep.delta_circ}")
    yield "alternating closed forms", bad


def _cmd_verify(args: argparse.Namespace, bound: int, parser: argparse.ArgumentParser) -> int:
    if args.max_n > bound:
        parser.error(f"--max-n {args.max_n} exceeds the oracle bound {bound}")
    failures = 0
    for name, bad in _verify_suites(args.max_n, bound):
        if bad:
            failures += len(bad)
            print(f"FAIL {name}")
            for line in bad:
                print(f"  {line}")
        else:
            print(f"ok {name}")
    print(f"verify: {'FAIL' if failures else 'ok'} up to n={args.max_n} ({failures} mismatches)")
    return 1 if failures else 0


def _cmd_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.max_n > ENUMERATION_LIMIT:
        parser.error(f"--max-n {args.max_n} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    start = time.perf_counter()
    odd_items = sum(1 for n in range(1, args.max_n + 1)
                    for _ in enumeration.enumerate_odd_partitions(n))
    odd_seconds = time.perf_counter() - start

    start = time.perf_counter()
    all_items = 0
    for n in range(1, args.max_n + 1):
        for p in enumerate_partitions(n):
            dim_mod4(p)
            all_items += 1
    all_seconds = time.perf_counter() - start

    rows = [
        {"method": "odd-stream", "items": odd_items, "seconds": round(odd_seconds, 4),
         "rate": round(odd_items / odd_seconds) if odd_seconds else None},
        {"method": "full-sweep", "items": all_items, "seconds": round(all_seconds, 4),
         "rate": round(all_items / all_seconds) if all_seconds else None},
    ]
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        if args.header:
            print("method,items,seconds,rate")
        for row in rows:
            print(",".join(str(v) for v in row.values()))
    else:
        for row in rows:
            print(f"{row['method']}: {row['items']} partitions in {row['seconds']}s "
                  f"({row['rate']}/s)")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        bound = args.oracle_bound if args.oracle_bound is not None else _default_bound()
        if args.command == "counts":
            return _cmd_counts(args, bound)
        if args.command == "verify":
            return _cmd_verify(args, bound, parser)
        if args.command == "tower":
            return _cmd_tower(args)
        if args.command == "parents":
            return _cmd_parents(args, parser)
        if args.command == "alt":
            return _cmd_alt(args, bound)
        if args.command == "bench":
            return _cmd_bench(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        if exc.code is not None:
            print(exc.code, file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
