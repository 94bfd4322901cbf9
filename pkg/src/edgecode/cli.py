"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 refused because a resource limit would be exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import metrics
from .errors import EdgeCodeError, ResourceLimit
from .field import build_field
from .hypergraph import FAMILIES, family, parse_hypergraph, serialize_hypergraph
from .torus import DEFAULT_MAX_POINTS, generator_matrix, gram_matrix, to_csv, to_json
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgecode", description="Edge codes of hypergraphs on the affine torus.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group(required=True)
    grp.add_argument("--hypergraph", metavar="FILE", help="hypergraph JSON file")
    grp.add_argument("--family", choices=FAMILIES, help="built-in family")
    source.add_argument("--n", type=_positive, help="vertex count (catalog: 1-based index)")
    source.add_argument("--d", type=_positive, help="parts of a partite-path clutter")
    source.add_argument("--d1", type=_positive, help="largest interval edge size")
    source.add_argument("--d2", type=_positive, help="smallest interval edge size")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--max-points", type=_positive, default=None)
    limits.add_argument("--max-messages", type=_positive, default=None,
                        help=f"defaults to ${metrics.MAX_MESSAGES_ENV} when set")
    limits.add_argument("--workers", type=_positive, default=1)

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("--q", type=int, required=True, help="field order")

    helps = {
        "params": "length and dimension",
        "mindist": "exact minimum distance",
        "weights": "full weight distribution",
        "gram": "Gram matrix and self-orthogonality",
        "export": "generator matrix as JSON or CSV",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, parents=[code, source, limits, out])
        if name in ("mindist", "weights"):
            p.add_argument("--full-enumeration", action="store_true",
                           help="scan all q^n messages instead of one per scalar class")
        if name == "export":
            p.add_argument("--format", choices=("json", "csv"), default="json")

    sub.add_parser("gen", help="print a hypergraph as JSON", parents=[source, out])

    v = sub.add_parser("verify", help="run a verification suite", parents=[limits, out])
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--q", type=int, nargs="+", required=True)
    v.add_argument("--resume", metavar="FILE", help="JSON-lines progress file; finished cases are reused")
    return parser


def _hypergraph(args):
    if args.hypergraph:
        try:
            with open(args.hypergraph, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.hypergraph}: {exc.strerror}") from None
        return parse_hypergraph(text)
    return family(args.family, n=args.n, d=args.d, d1=args.d1, d2=args.d2)


def _max_messages(args, default):
    if args.max_messages is not None:
        return args.max_messages
    env = os.environ.get(metrics.MAX_MESSAGES_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"${metrics.MAX_MESSAGES_ENV} must be an integer") from None
    return default


def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "gen":
        _emit(args, serialize_hypergraph(_hypergraph(args)))
        return EXIT_OK

    if args.command == "verify":
        reports = run_suite(args.suite, args.q, workers=args.workers,
                            max_messages=_max_messages(args, None), max_points=args.max_points,
                            progress=args.resume)
        data = [r.to_dict() for r in reports]
        _emit(args, json.dumps(data[0] if len(data) == 1 else data))
        return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH

    h = _hypergraph(args)
    code = generator_matrix(h, build_field(args.q), args.max_points or DEFAULT_MAX_POINTS)
    if args.command == "params":
        result = {"length": code.length, "dimension": code.dimension}
    elif args.command == "mindist":
        r = metrics.minimum_distance_exhaustive(
            code, projective=not args.full_enumeration, workers=args.workers,
            max_messages=_max_messages(args, metrics.DEFAULT_MAX_MESSAGES))
        result = {"distance": r.distance, "witness": list(r.witness), "search_space": r.search_space,
                  "elapsed_ms": int(1000 * r.elapsed)}
    elif args.command == "weights":
        wd = metrics.weight_distribution(
            code, projective=not args.full_enumeration, workers=args.workers,
            max_messages=_max_messages(args, metrics.DEFAULT_MAX_MESSAGES))
        result = {"length": wd.length, "dimension": wd.dimension, "minimum_distance": wd.minimum_distance,
                  "distribution": {str(w): a for w, a in sorted(wd.counts.items())}}
    elif args.command == "gram":
        g = gram_matrix(code)
        result = {"self_orthogonal": not g.any(), "gram": g.tolist()}
    elif args.command == "export":
        _emit(args, to_csv(code) if args.format == "csv" else to_json(code))
        return EXIT_OK
    else:  # pragma: no cover - argparse restricts commands
        raise UsageError(f"unknown command {args.command}")
    _emit(args, json.dumps(result))
    return EXIT_OK


def _fail(kind, message, code):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except ResourceLimit as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_LIMIT)
    except (EdgeCodeError, UsageError, ValueError) as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_USAGE)
    except OSError as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_USAGE)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
