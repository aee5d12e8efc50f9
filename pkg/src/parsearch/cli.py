"""Command-line driver.

Subcommands: ``search``, ``maxload``, ``bounds``, ``adversary``.  Every run
is fully determined by ``--seed``; identical invocations produce
byte-identical output.  Exit codes: 0 success, 1 usage error, 2 infeasible
instance.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .adversary import InfeasibleInstanceError
from .experiments import (
    ExperimentConfig,
    run_adversary_check,
    run_bound_table,
    run_maxload_check,
    run_search_experiment,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _int_list(text: str) -> list:
    return [int(part) for part in text.split(",") if part]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="parsearch",
        description="Quantum multi-item parallel search: simulation, "
                    "Monte-Carlo checks, and query-complexity bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    search = sub.add_parser("search", help="run seeded parallel-search trials")
    search.add_argument("--n", type=int, required=True, help="address bits, N=2**n")
    search.add_argument("--d", type=int, default=1, help="database copies")
    search.add_argument("--k", type=int, default=1, help="target items")
    search.add_argument("--m", type=int, default=None, help="item bits (default n+1)")
    search.add_argument("--t", type=int, default=None, help="override per-cell cap")
    search.add_argument("--trials", type=int, default=100)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--zero-filler", action="store_true",
                        help="store 0 at non-target addresses")
    search.add_argument("--out", default=None)
    search.add_argument("--format", choices=("json", "csv"), default="json")

    maxload = sub.add_parser("maxload", help="empirical max-load vs the union bound")
    maxload.add_argument("--n", type=int, default=None, help="address bits")
    maxload.add_argument("--d", type=int, required=True)
    maxload.add_argument("--k", type=int, required=True)
    maxload.add_argument("--t", type=int, required=True, help="per-cell cap")
    maxload.add_argument("--trials", type=int, default=100000)
    maxload.add_argument("--seed", type=int, default=0)
    maxload.add_argument("--out", default=None)
    maxload.add_argument("--format", choices=("json", "csv"), default="json")

    bounds = sub.add_parser("bounds", help="measured rounds vs bound formulas")
    bounds.add_argument("--n", type=_int_list, default=[], metavar="N1,N2,...",
                        help="comma-separated address-bit values")
    bounds.add_argument("--d", type=_int_list, default=[], metavar="D1,D2,...")
    bounds.add_argument("--k", type=_int_list, default=[], metavar="K1,K2,...")
    bounds.add_argument("--trials", type=int, default=50)
    bounds.add_argument("--seed", type=int, default=0)
    bounds.add_argument("--out", default=None)
    bounds.add_argument("--format", choices=("json", "csv"), default="json")

    adv = sub.add_parser("adversary", help="brute-force adversary-graph check")
    adv.add_argument("--n", type=int, required=True)
    adv.add_argument("--m", type=int, required=True)
    adv.add_argument("--d", type=int, required=True)
    adv.add_argument("--k", type=int, required=True)
    adv.add_argument("--out", default=None)
    adv.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


def _csv_rows(record: dict) -> tuple:
    """Flatten a record to (header, rows) with aggregate-level detail only."""
    cmd = record["command"]
    if cmd == "search":
        row = dict(record["config"])
        row.update({
            "regime": record["regime"]["tag"],
            "t": record["regime"]["t"],
            **record["aggregates"],
            "lower_bound": record["reference"]["lower_bound"],
            "upper_envelope": record["reference"]["upper_envelope"],
        })
        return list(row), [row]
    if cmd == "maxload":
        row = dict(record["config"])
        row.update({
            "empirical_exceedance": record["empirical_exceedance"],
            "standard_error": record["standard_error"],
            "union_bound": record["union_bound"],
            "within_bound": record["within_bound"],
        })
        return list(row), [row]
    if cmd == "bounds":
        if not record["rows"]:
            return [], []
        return list(record["rows"][0]), record["rows"]
    # adversary
    row = dict(record["config"])
    row.update(record["stats"])
    row.update(record["claims"])
    row.update({
        "ambainis_bound": record["ambainis_bound"],
        "closed_form_bound": record["closed_form_bound"],
    })
    return list(row), [row]


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, sort_keys=True) + "\n"
    header, rows = _csv_rows(record)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    if header:
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def _emit(record: dict, out, fmt: str) -> None:
    text = render(record, fmt)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "search":
            cfg = ExperimentConfig(
                n=args.n, d=args.d, k=args.k, m=args.m, trials=args.trials,
                seed=args.seed, t_override=args.t,
                zero_filler=args.zero_filler,
            )
            record = run_search_experiment(cfg)
        elif args.command == "maxload":
            record = run_maxload_check(
                k=args.k, d=args.d, t=args.t, trials=args.trials,
                seed=args.seed, n=args.n,
            )
        elif args.command == "bounds":
            record = run_bound_table(
                ns=args.n, ds=args.d, ks=args.k, trials=args.trials,
                seed=args.seed,
            )
        else:
            record = run_adversary_check(n=args.n, m=args.m, d=args.d, k=args.k)
    except InfeasibleInstanceError as exc:
        print(f"parsearch: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        print(f"parsearch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _emit(record, args.out, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
