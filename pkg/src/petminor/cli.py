"""Command line: generators, single checks and the claim harness.

Exit codes: 0 success, 1 claim failure (or a failed colouring), 2 usage,
3 input/output error, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import claims, families
from .coloring import ColoringError, minus_one_coloring, vertex_arboricity_partition
from .graph import GraphError
from .graph6 import Graph6Error, encode, iter_lines
from .minors import DEFAULT_BUDGET, BudgetExhausted, has_minor

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read_graphs(path: str):
    try:
        if path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            lines = Path(path).read_text(encoding="ascii").splitlines()
        graphs = list(iter_lines(lines))
    except (OSError, UnicodeDecodeError, Graph6Error) as err:
        raise InputError(f"{path}: {err}") from err
    if not graphs:
        raise InputError(f"{path}: no graphs")
    return graphs


def _cmd_gen(args: argparse.Namespace) -> int:
    g = families.named(args.family, args.params)
    print(encode(g))
    return EXIT_OK


def _cmd_minor(args: argparse.Namespace) -> int:
    hosts = _read_graphs(args.host)
    pattern = _read_graphs(args.pattern)[0]
    for host in hosts:
        try:
            model = has_minor(host, pattern, budget=args.budget)
        except BudgetExhausted as err:
            print(json.dumps({"present": None, "error": str(err)}))
            return EXIT_BUDGET
        out = {"present": model is not None}
        if model is not None:
            out["branch_sets"] = model.to_json()
        print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _cmd_color(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for g in _read_graphs(args.graph):
        try:
            col = minus_one_coloring(g, args.c)
        except ColoringError as err:
            print(json.dumps({"error": str(err)}))
            status = EXIT_FAIL
            continue
        print(json.dumps(list(col.colors)))
    return status


def _cmd_arboricity(args: argparse.Namespace) -> int:
    for g in _read_graphs(args.graph):
        print(json.dumps(list(vertex_arboricity_partition(g).parts)))
    return EXIT_OK


def _cmd_claims_run(args: argparse.Namespace) -> int:
    cfg = claims.RunConfig(seed=args.seed, only=args.only, jobs=args.jobs)
    reports = claims.run_all(cfg)
    text = claims.reports_to_json(reports)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as err:
            raise InputError(f"{args.out}: {err}") from err
    else:
        sys.stdout.write(text)
    for r in reports:
        print(f"{r.claim_id:22s} {r.status:17s} {r.instances_checked:6d} instances  {r.wall_time:8.2f}s",
              file=sys.stderr)
    return claims.exit_status(reports)


def _cmd_claims_verify(args: argparse.Namespace) -> int:
    try:
        reports = claims.reports_from_json(Path(args.report).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as err:
        raise InputError(f"{args.report}: {err}") from err
    ok = True
    for r in reports:
        if r.status == claims.FAIL:
            confirmed = claims.revalidate(r)
            ok &= confirmed
            print(f"{r.claim_id}: counterexample {'confirmed' if confirmed else 'NOT confirmed'}")
    return claims.exit_status(reports) if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="petminor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print a family member as graph6")
    gen.add_argument("family", choices=families.FAMILY_NAMES)
    gen.add_argument("params", nargs="*", type=int)
    gen.set_defaults(func=_cmd_gen)

    minor = sub.add_parser("minor", help="test each host graph for the pattern as a minor")
    minor.add_argument("host", help="graph6 file, one graph per line ('-' for stdin)")
    minor.add_argument("pattern", help="graph6 file; the first graph is used")
    minor.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    minor.set_defaults(func=_cmd_minor)

    color = sub.add_parser("color", help="colour with at most 2c - 1 colours")
    color.add_argument("graph")
    color.add_argument("--c", type=int, default=5)
    color.set_defaults(func=_cmd_color)

    arb = sub.add_parser("arboricity", help="partition into forests")
    arb.add_argument("graph")
    arb.set_defaults(func=_cmd_arboricity)

    cl = sub.add_parser("claims", help="claim harness")
    clsub = cl.add_subparsers(dest="claims_command", required=True)
    run = clsub.add_parser("run", help="run claims and write a JSON report")
    run.add_argument("--only", action="append", choices=claims.CLAIM_IDS)
    run.add_argument("--seed", type=int, default=42)
    run.add_argument("--out")
    run.add_argument("--jobs", type=int, default=1)
    run.set_defaults(func=_cmd_claims_run)
    verify = clsub.add_parser("verify", help="re-check the counterexamples in a report")
    verify.add_argument("report")
    verify.set_defaults(func=_cmd_claims_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO
    except GraphError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except claims.HarnessError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
