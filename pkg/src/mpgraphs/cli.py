"""Command-line surface.

Subcommands: validate, census, witness, gk, scan, random, draw, cyclic,
check.  ``-`` means stdin wherever a FILE is expected.  JSON output has
sorted keys and embeds the tool version, so byte-stable golden files are
possible.  Exit codes: 0 ok / verdict holds, 1 verdict fails, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from . import __version__
from .census import (
    census,
    check_redrawing,
    check_replace,
    check_lower_bound,
    check_zhang,
    exhaustive_scan,
    random_instance,
)
from .core import (
    MarkedPermutationGraph,
    find_cyclic_cut,
    parse_instance,
)
from .crossing import standard_drawing
from .errors import MpgError, PreconditionViolated
from .family import generate_gk
from .witness import find_p10_through, witness_report_dict

SCHEMA_VERSION = 1


def _emit_json(obj: dict, stdout: IO[str]) -> None:
    obj = dict(obj)
    obj.setdefault("schema_version", SCHEMA_VERSION)
    obj.setdefault("tool_version", __version__)
    stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load_instance(path: str, stdin: IO[str]) -> MarkedPermutationGraph:
    if path == "-":
        return parse_instance(stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpg",
        description="Marked permutation graphs: censuses, Petersen witnesses, drawings.",
    )
    parser.add_argument("--version", action="version", version=f"mpg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance and echo its canonical form")
    p.add_argument("file")

    p = sub.add_parser("census", help="enumerate all matched 4-cycles and Petersen witnesses")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("witness", help="certified Petersen subdivision through an edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)

    p = sub.add_parser("gk", help="emit the extremal family instance G_k")
    p.add_argument("k", type=int)

    p = sub.add_parser("scan", help="exhaustively verify all instances of a half-order")
    p.add_argument("m", type=int)
    p.add_argument("--out", help="write the per-instance CSV summary here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("random", help="seeded random instance")
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--c4-free", action="store_true")
    p.add_argument("--max-attempts", type=int, default=100000)

    p = sub.add_parser("draw", help="standard two-row drawing (svg or dot)")
    p.add_argument("file")
    p.add_argument("--anchor", type=int, default=0)
    p.add_argument("--format", default="svg", choices=["svg", "dot"])

    p = sub.add_parser("cyclic", help="cyclic 5-edge-connectivity with certificate cut")
    p.add_argument("file")

    p = sub.add_parser("check", help="run one lemma checker")
    p.add_argument("file")
    p.add_argument(
        "--lemma", required=True, choices=["redrawing", "replace", "zhang", "lower"]
    )
    p.add_argument(
        "--args",
        type=int,
        nargs="*",
        default=[],
        help="edge/anchor indices for redrawing and replace (two integers)",
    )
    return parser


def run(
    argv: list[str],
    stdin: IO[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse prints usage itself; normalize exit code
        return 0 if exc.code in (0, None) else 2

    try:
        return _dispatch(args, stdin, stdout)
    except PreconditionViolated as exc:
        _emit_json(exc.to_json_dict(), stdout)
        return 1
    except MpgError as exc:
        _emit_json(exc.to_json_dict(), stdout)
        return 2
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def _dispatch(args: argparse.Namespace, stdin: IO[str], stdout: IO[str]) -> int:
    if args.command == "validate":
        G = _load_instance(args.file, stdin)
        stdout.write(G.to_text() + "\n")
        return 0

    if args.command == "census":
        G = _load_instance(args.file, stdin)
        report = census(G, jobs=args.jobs)
        if args.json:
            _emit_json(report.to_json_dict(), stdout)
        else:
            stdout.write(
                f"instance: {report.instance_id}\n"
                f"c4_count: {report.c4_count}\n"
                f"p10_count: {report.p10_count}\n"
                f"zhang_ok: {report.zhang_ok}\n"
            )
        return 0

    if args.command == "witness":
        G = _load_instance(args.file, stdin)
        X, trace = find_p10_through(G, args.edge)
        _emit_json(witness_report_dict(X, trace), stdout)
        return 0

    if args.command == "gk":
        inst = generate_gk(args.k)
        stdout.write(inst.graph.to_text() + "\n")
        stdout.write(
            "# classification: "
            + json.dumps(inst.classification_json(), sort_keys=True)
            + "\n"
        )
        return 0

    if args.command == "scan":
        report = exhaustive_scan(args.m, jobs=args.jobs)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(report.to_csv())
        if args.json:
            _emit_json(report.to_json_dict(), stdout)
        else:
            stdout.write(
                f"m: {report.m}\n"
                f"instances: {report.instance_count}\n"
                f"witness_runs: {report.witness_runs}\n"
                f"violations: {report.violation_count}\n"
            )
        return 0 if report.violation_count == 0 else 1

    if args.command == "random":
        G = random_instance(
            args.m,
            seed=args.seed,
            require_c4_free=args.c4_free,
            max_attempts=args.max_attempts,
        )
        stdout.write(G.to_text() + "\n")
        stdout.write(f"# seed: {args.seed}\n")
        return 0

    if args.command == "draw":
        G = _load_instance(args.file, stdin)
        stdout.write(standard_drawing(G, args.anchor, format=args.format))
        return 0

    if args.command == "cyclic":
        G = _load_instance(args.file, stdin)
        cut = find_cyclic_cut(G)
        _emit_json(
            {
                "cyclically_5_edge_connected": cut is None,
                "violating_cut": None if cut is None else [[kind, i] for kind, i in cut],
            },
            stdout,
        )
        return 0 if cut is None else 1

    if args.command == "check":
        G = _load_instance(args.file, stdin)
        if args.lemma in ("redrawing", "replace"):
            if len(args.args) != 2:
                raise MpgError(
                    f"--lemma {args.lemma} needs two indices via --args A B",
                    args=args.args,
                )
            a, b = args.args
            verdict = (
                check_redrawing(G, a, b)
                if args.lemma == "redrawing"
                else check_replace(G, a, b)
            )
        elif args.lemma == "zhang":
            verdict = check_zhang(G)
        else:
            verdict = check_lower_bound(G)
        _emit_json(verdict.to_json_dict(), stdout)
        return 0 if verdict.ok else 1

    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))
