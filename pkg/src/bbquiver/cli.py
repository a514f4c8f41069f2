"""Command-line front end.

Exit codes: 0 success, 1 validation or parse failure, 2 usage error
(including missing files).  File arguments may also name a bundled data
file, e.g. ``knots_upto8.pd``.  ``table`` computes its rows in parallel;
set ``BBQUIVER_WORKERS`` to limit the number of processes.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import (__version__, data_path, load_biquandle, load_bracket, load_diagrams,
               load_maps)
from .biquandle import BiquandleError, BqMap, endomorphisms
from .bracket import NORMALIZATIONS, BracketError, bracket_values
from .coloring import enumerate_colorings
from .diagram import DiagramError
from .quiver import (WORKERS_ENV, QuiverError, build_quiver, export_dot, indegree_polynomial,
                     two_variable_polynomial)
from .rings import RingError

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(path: str) -> str:
    p = Path(path)
    if p.is_file():
        return str(p)
    if p.parent == Path("."):
        try:
            return str(data_path(path))
        except FileNotFoundError:
            pass
    raise UsageError(f"no such file: {path}")


# -- commands -------------------------------------------------------------

def cmd_validate_biquandle(args, out):
    try:
        X = load_biquandle(_resolve(args.biquandle))
    except BiquandleError as exc:
        if not exc.violations:
            raise
        for v in exc.violations:
            out.append(v.describe())
        return EXIT_INVALID
    out.append(f"OK n={X.n}")
    return EXIT_OK


def cmd_validate_bracket(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    try:
        beta = load_bracket(_resolve(args.bracket), X, strict=True)
    except BracketError as exc:
        if not exc.violations:
            raise
        for v in exc.violations:
            out.append(v.describe())
        return EXIT_INVALID
    out.append(f"OK delta={beta.delta.key()} w={beta.w.key()}")
    return EXIT_OK


def cmd_endos(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    maps = endomorphisms(X)
    out.append(str(len(maps)))
    out.extend(f.one_indexed() for f in maps)
    return EXIT_OK


def cmd_colorings(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    for d in load_diagrams(_resolve(args.diagram), args.name):
        cols = enumerate_colorings(d, X)
        out.append(f"{d.name}: {len(cols)}")
        if args.verbose:
            out.extend("  " + " ".join(str(c + 1) for c in col) for col in cols)
    return EXIT_OK


def _bracket(args, X):
    strict = False if args.unchecked else None
    return load_bracket(_resolve(args.bracket), X, strict=strict)


def cmd_bracket(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    beta = _bracket(args, X)
    for d in load_diagrams(_resolve(args.diagram), args.name):
        vals = bracket_values(d, enumerate_colorings(d, X), beta, args.normalization)
        out.append(f"{d.name}: {_multiset_text(vals)}")
    return EXIT_OK


def _multiset_text(vals) -> str:
    counts = Counter(v.key() for v in vals)
    return "{" + ", ".join(f"{k}: {counts[k]}" for k in sorted(counts)) + "}"


def _endos(args, X) -> list[BqMap]:
    if args.endos == "all":
        return endomorphisms(X)
    if args.endos == "identity":
        return [BqMap.identity(X.n)]
    return load_maps(_resolve(args.endos), X)


def cmd_quiver(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    beta = _bracket(args, X)
    S = _endos(args, X)
    dots = []
    for d in load_diagrams(_resolve(args.diagram), args.name):
        q = build_quiver(d, X, S, beta, normalization=args.normalization)
        out.append(f"{d.name}: {len(q.vertices)} vertices, {len(q.edges)} edges, |S|={len(S)}")
        for i, ((col, w), k) in enumerate(zip(q.vertices, q.in_degrees())):
            out.append(f"  v{i} weight={w.key()} indeg={k} coloring={' '.join(str(c + 1) for c in col)}")
        dots.append(export_dot(q))
    if args.dot:
        Path(args.dot).write_text("".join(dots), encoding="utf-8")
    return EXIT_OK


def _poly_text(d, X, S, beta, kind, weighting, normalization) -> str:
    q = build_quiver(d, X, S, beta, normalization=normalization, workers=1)
    p = indegree_polynomial(q, weighting) if kind == "indeg" else two_variable_polynomial(q)
    return p.to_text()


def cmd_poly(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    beta = _bracket(args, X)
    S = _endos(args, X)
    for d in load_diagrams(_resolve(args.diagram), args.name):
        out.append(f"{d.name}: {_poly_text(d, X, S, beta, args.kind, args.weighting, args.normalization)}")
    return EXIT_OK


def _table_row(job):
    d, X, S, beta, kind, weighting, normalization = job
    try:
        return d.name, _poly_text(d, X, S, beta, kind, weighting, normalization), None
    except (QuiverError, BracketError, ValueError, ArithmeticError) as exc:
        return d.name, None, str(exc)


def cmd_table(args, out):
    X = load_biquandle(_resolve(args.biquandle))
    beta = _bracket(args, X)
    S = _endos(args, X)
    jobs = [(d, X, S, beta, args.kind, args.weighting, args.normalization)
            for d in load_diagrams(_resolve(args.diagram))]
    # rows run in parallel, by default on every available core
    workers = max(1, int(os.environ.get(WORKERS_ENV) or os.cpu_count() or 1))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_table_row, jobs))
    else:
        rows = [_table_row(j) for j in jobs]
    status = EXIT_OK
    if args.group:
        groups = defaultdict(list)
        for name, text, err in rows:
            groups[text if err is None else f"ERROR {err}"].append(name)
        for text, names in groups.items():
            out.append(f"{text} & {', '.join(names)}")
    else:
        for name, text, err in rows:
            out.append(f"{name} & {text}" if err is None else f"{name} & ERROR {err}")
    if any(err is not None for _, _, err in rows):
        status = EXIT_INVALID
    return status


# -- parser ---------------------------------------------------------------

def _add_eval_options(p, endos=True):
    p.add_argument("diagram", help="diagram file (name : PD tokens per line)")
    p.add_argument("biquandle", help="biquandle file")
    p.add_argument("bracket", help="bracket file")
    p.add_argument("--unchecked", action="store_true",
                   help="evaluate without enforcing the bracket axioms")
    p.add_argument("--normalization", choices=NORMALIZATIONS, default="closed",
                   help="closed: unknot = delta (default); unit: unknot = 1")
    if endos:
        p.add_argument("--endos", default="all",
                       help="all (default), identity, or a file of 1-indexed image lists")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bbquiver", description="Biquandle bracket quivers of link diagrams.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-biquandle", help="check the biquandle axioms")
    p.add_argument("biquandle")
    p.set_defaults(func=cmd_validate_biquandle)

    p = sub.add_parser("validate-bracket", help="check the bracket axioms")
    p.add_argument("bracket")
    p.add_argument("biquandle")
    p.set_defaults(func=cmd_validate_bracket)

    p = sub.add_parser("endos", help="list all endomorphisms")
    p.add_argument("biquandle")
    p.set_defaults(func=cmd_endos)

    p = sub.add_parser("colorings", help="count colorings")
    p.add_argument("diagram")
    p.add_argument("biquandle")
    p.add_argument("--name")
    p.add_argument("--verbose", action="store_true", help="also list each coloring")
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("bracket", help="multiset of bracket values")
    _add_eval_options(p, endos=False)
    p.add_argument("--name")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("quiver", help="build the bracket quiver")
    _add_eval_options(p)
    p.add_argument("--name")
    p.add_argument("--dot", help="write the quiver(s) in DOT format to this path")
    p.set_defaults(func=cmd_quiver)

    for cmd, func, helptext in (("poly", cmd_poly, "quiver polynomial of each diagram"),
                                ("table", cmd_table, "one table row per diagram")):
        p = sub.add_parser(cmd, help=helptext)
        _add_eval_options(p)
        p.add_argument("--kind", choices=("indeg", "twovar"), default="indeg")
        p.add_argument("--weighting", choices=("vertex", "edge"), default="vertex",
                       help="in-degree sum per vertex (default) or per edge")
        if cmd == "poly":
            p.add_argument("--name")
        else:
            p.add_argument("--group", action="store_true", help="group diagrams by value")
        p.set_defaults(func=func)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BiquandleError, BracketError, DiagramError, QuiverError, RingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        for v in getattr(exc, "violations", ()):
            print(v.describe(), file=sys.stderr)
        return EXIT_INVALID
    # buffered so a failing job leaves no partial output
    if out:
        stdout.write("\n".join(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
