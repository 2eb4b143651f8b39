"""Command-line interface: solve instances, benchmark, generate corpora.

Exit codes: 0 success, 1 answer mismatch against the reference solver,
2 malformed input, 3 resource limit exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from . import oracle
from .errors import InstanceError, PreconditionError, ResourceLimitError
from .gen import (
    KNAPSACK_FAMILIES,
    SUBSETSUM_FAMILIES,
    GeneratorSpec,
    generate_knapsack,
    generate_subset_sum,
)
from .greedy import PartitionConfig
from .instfile import InstanceFile, load_instance, save_instance
from .knapsack import SolverConfig, solve_knapsack
from .model import normalize_knapsack, normalize_subset_sum
from .subsetsum import SubsetSumConfig, solve_subset_sum

KNAP_ALGOS = {
    "knap-baseline": "baseline",
    "knap-52": "two-way",
    "knap-125": "three-way",
}
SS_ALGOS = {
    "ss-auto": "auto",
    "ss-nw": "layered",
    "ss-dense": "dense",
}
ALL_ALGOS = (*KNAP_ALGOS, *SS_ALGOS, "oracle-dp")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_generate(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ResourceLimitError, PreconditionError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proxiknap",
        description="Bounded knapsack and subset-sum solvers and benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance file")
    solve.add_argument("file", type=Path)
    _common_solver_flags(solve)
    solve.add_argument(
        "--check",
        action="store_true",
        help="also run the reference solver and compare answers",
    )
    solve.add_argument("--json", action="store_true", help="JSON output")

    bench = sub.add_parser("bench", help="time solvers over instance files")
    bench.add_argument("files", nargs="+", type=Path)
    _common_solver_flags(bench)
    bench.add_argument("--csv", type=Path, help="write results as CSV")

    gen = sub.add_parser("generate", help="write random instance files")
    gen.add_argument("--kind", choices=("knapsack", "subsetsum"), required=True)
    gen.add_argument(
        "--family",
        required=True,
        help=f"knapsack: {', '.join(KNAPSACK_FAMILIES)}; "
        f"subsetsum: {', '.join(SUBSETSUM_FAMILIES)}",
    )
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--wmax", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--out-dir", type=Path, default=Path("."))
    gen.add_argument("--json", action="store_true", help="write .json files")
    return parser


def _common_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--algo",
        action="append",
        choices=ALL_ALGOS,
        help="solver tag; may repeat for bench (default: scheme-appropriate)",
    )
    p.add_argument("--cA", type=float, default=1.0, dest="c_a")
    p.add_argument("--cB", type=float, default=1.0, dest="c_b")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument(
        "--no-verify",
        action="store_true",
        help="skip the bound-doubling verification pass (knapsack)",
    )
    p.add_argument(
        "--randomized-sums",
        action="store_true",
        help="use the randomized sum-set backend (subset sum dense path)",
    )


def _default_algo(inst: InstanceFile) -> str:
    return "knap-125" if inst.kind == "knapsack" else "ss-auto"


def _run(inst: InstanceFile, algo: str, args) -> dict:
    start = time.perf_counter_ns()
    cells = 0
    sumset_bytes = 0
    if algo == "oracle-dp":
        if inst.kind == "knapsack":
            res = oracle.dp_knapsack(normalize_knapsack(inst.items, inst.bound))
            answer: int | bool = res.value
        else:
            answer = oracle.subset_sum_decision(
                normalize_subset_sum(inst.pairs, inst.bound)
            )
    elif algo in KNAP_ALGOS:
        if inst.kind != "knapsack":
            raise InstanceError(f"{algo} requires a knapsack instance")
        cfg = SolverConfig(
            scheme=KNAP_ALGOS[algo],
            partition=PartitionConfig(args.c_a, args.c_b),
            verify=not args.no_verify,
        )
        result = solve_knapsack(inst.items, inst.bound, cfg)
        answer = result.value
        cells = result.stats.conv_cells
    else:
        if inst.kind != "subsetsum":
            raise InstanceError(f"{algo} requires a subset-sum instance")
        cfg = SubsetSumConfig(
            c_a=args.c_a,
            c_b=args.c_b,
            algo=SS_ALGOS[algo],
            sums_backend="randomized" if args.randomized_sums else "exact",
            seed=args.seed,
        )
        ss = solve_subset_sum(inst.pairs, inst.bound, cfg)
        answer = ss.answer
        sumset_bytes = ss.stats.sumset_bytes
    ns = time.perf_counter_ns() - start
    return {
        "algo": algo,
        "answer": answer,
        "ns": ns,
        "cells": cells,
        "sumset_bytes": sumset_bytes,
        "seed": args.seed,
        "cfg": f"cA={args.c_a},cB={args.c_b}",
    }


def _reference_answer(inst: InstanceFile):
    if inst.kind == "knapsack":
        return oracle.dp_knapsack(normalize_knapsack(inst.items, inst.bound)).value
    return oracle.subset_sum_decision(
        normalize_subset_sum(inst.pairs, inst.bound)
    )


def _cmd_solve(args) -> int:
    inst = load_instance(args.file)
    algo = (args.algo or [_default_algo(inst)])[0]
    record = _run(inst, algo, args)
    record["file"] = str(args.file)
    if args.check:
        expected = _reference_answer(inst)
        record["expected"] = expected
        record["match"] = record["answer"] == expected
    if args.json:
        print(json.dumps(record))
    else:
        line = f"{args.file}: {algo} answer={record['answer']} ({record['ns']} ns)"
        if args.check:
            line += " match" if record["match"] else f" MISMATCH expected={record['expected']}"
        print(line)
    if args.check and not record["match"]:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_bench(args) -> int:
    records = []
    for path in args.files:
        inst = load_instance(path)
        algos = args.algo or [_default_algo(inst)]
        for algo in algos:
            record = _run(inst, algo, args)
            record["id"] = str(path)
            records.append(record)
            print(
                f"{record['id']},{algo},{record['answer']},{record['ns']},"
                f"{record['cells']},{record['sumset_bytes']}"
            )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(
                fh,
                fieldnames=[
                    "id",
                    "algo",
                    "answer",
                    "ns",
                    "cells",
                    "sumset_bytes",
                    "seed",
                    "cfg",
                ],
                extrasaction="ignore",
            )
            writer.writeheader()
            writer.writerows(records)
    return EXIT_OK


def _cmd_generate(args) -> int:
    args.out_dir.mkdir(parents=True, exist_ok=True)
    ext = "json" if args.json else "txt"
    for index in range(args.count):
        spec = GeneratorSpec(
            args.kind, args.family, args.n, args.wmax, args.seed, index
        )
        comments = [
            f"generated kind={args.kind} family={args.family} n={args.n} "
            f"wmax={args.wmax} seed={args.seed} index={index}"
        ]
        if args.kind == "knapsack":
            items, bound = generate_knapsack(spec)
            rows = [(it.weight, it.profit, it.multiplicity) for it in items]
        else:
            rows, bound = generate_subset_sum(spec)
        name = f"{args.kind}-{args.family}-{args.seed}-{index}.{ext}"
        path = args.out_dir / name
        save_instance(path, args.kind, rows, bound, comments)
        print(path)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
