"""Command-line front end.

Subcommands:
- ``solve kotzig|yeo``: read one graph, print its certificate as canonical
  JSON on stdout.
- ``verify``: run a campaign and write the deterministic report (canonical
  JSON, no wall time) to --out or stdout; a human summary goes to stderr.
  Exit 0 when the report is clean, 1 when it lists violations.
- ``check``: feed a serialized certificate to the untrusting checker; the
  result code is printed on stdout.  Exit 0 iff accepted.

Exit codes: 0 success / clean, 1 violations or rejected certificate,
2 bad input (argument or format errors), 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys

from .campaigns import (
    Campaign,
    DEFAULT_COLORING_CAP,
    ExhaustiveSource,
    Graph6FileSource,
    RandomSource,
    run_campaign,
)
from .certificates import check_certificate, serialize_certificate
from .errors import ArgumentError, FormatError, InternalInvariantError
from .formats import load_graph_text
from .graph import Graph
from .kotzig import kotzig_dichotomy
from .matching import Matching, first_perfect_matching
from .yeo import yeo_dichotomy


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ArgumentError(f"cannot read {path}: {exc}") from exc
    return load_graph_text(text, hint=path)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    if args.theorem == "kotzig":
        if g.is_colored:
            print("note: ignoring edge colors; matching structure is color-blind",
                  file=sys.stderr)
            g = g.uncolored()
        if args.matching is not None:
            try:
                ids = frozenset(int(tok) for tok in args.matching.split(",") if tok.strip())
            except ValueError as exc:
                raise ArgumentError(f"--matching must be comma-separated edge ids: {exc}")
            f = Matching(g, ids)
        else:
            f = first_perfect_matching(g)
            if f is None:
                raise ArgumentError("graph has no perfect matching")
        cert = kotzig_dichotomy(g, f)
    else:
        cert = yeo_dichotomy(g)
    sys.stdout.write(serialize_certificate(cert) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.infile is not None:
        source = Graph6FileSource(args.infile, k_colors=args.k)
    elif args.count is not None or args.p is not None:
        if args.count is None or args.p is None:
            raise ArgumentError("random campaigns need both --count and --p")
        if args.n_max is None:
            raise ArgumentError("random campaigns need --n-max for the vertex count")
        source = RandomSource(n=args.n_max, p=args.p, count=args.count,
                              seed=args.seed, k_colors=args.k)
    else:
        if args.n_max is None:
            raise ArgumentError("exhaustive campaigns need --n-max")
        source = ExhaustiveSource(args.n_max, k_colors=args.k)
    campaign = Campaign(
        mode=args.mode,
        source=source,
        coloring_cap=args.cap,
        seed=args.seed,
        time_budget=args.time_budget,
        unsafe_scale=args.unsafe_scale,
    )
    report = run_campaign(campaign)
    text = report.canonical_json()
    if args.out is not None:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    arms = ", ".join(f"{a}={c}" for a, c in sorted(report.certificates_by_arm.items())) or "none"
    print(
        f"mode={report.mode} instances={report.instances_tested} "
        f"skipped={report.skipped} arms: {arms} "
        f"violations={len(report.violations)} "
        f"wall={report.wall_time:.2f}s{' (partial)' if report.partial else ''}",
        file=sys.stderr,
    )
    return 1 if report.violations else 0


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        with open(args.cert, "r", encoding="utf-8") as fh:
            cert_text = fh.read()
    except OSError as exc:
        raise ArgumentError(f"cannot read {args.cert}: {exc}") from exc
    result = check_certificate(g, cert_text)
    print(result.code)
    if result.detail:
        print(result.detail, file=sys.stderr)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="certigraph",
        description="Certifying dichotomy solvers for perfect matchings and "
                    "edge-colored alternating cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance and print its certificate")
    p_solve.add_argument("theorem", choices=("kotzig", "yeo"))
    p_solve.add_argument("--in", dest="infile", required=True, metavar="FILE",
                         help="input graph (.g6 or .cel)")
    p_solve.add_argument("--matching", default=None, metavar="IDS",
                         help="comma-separated edge ids of the base perfect matching "
                              "(kotzig only; defaults to the first one found)")
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="run a verification campaign")
    p_verify.add_argument("--mode", required=True, choices=("kotzig", "yeo", "cross", "lemmas"))
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=None,
                          help="vertex count for exhaustive/random sources")
    p_verify.add_argument("--k", type=int, default=2, help="colors per instance (colored modes)")
    p_verify.add_argument("--cap", type=int, default=DEFAULT_COLORING_CAP,
                          help="max colorings enumerated per graph")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--count", type=int, default=None,
                          help="number of random graphs (selects the random source)")
    p_verify.add_argument("--p", type=float, default=None,
                          help="edge probability for the random source")
    p_verify.add_argument("--in", dest="infile", default=None, metavar="FILE",
                          help="graph6 file, one graph per line (overrides other sources)")
    p_verify.add_argument("--time-budget", dest="time_budget", type=float, default=None,
                          help="seconds before the campaign stops early (report marked partial)")
    p_verify.add_argument("--unsafe-scale", dest="unsafe_scale", action="store_true",
                          help="override the exhaustive feasibility caps")
    p_verify.add_argument("--out", default=None, metavar="FILE",
                          help="write the canonical report here instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)

    p_check = sub.add_parser("check", help="check a serialized certificate against a graph")
    p_check.add_argument("--graph", required=True, metavar="FILE")
    p_check.add_argument("--cert", required=True, metavar="FILE")
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ArgumentError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
