"""Command-line front end: `knot` with subcommands info, verify, lattice,
seifert and curve.

Exit codes: 0 success / conclusive, 1 usage or input error, 2 inconclusive
search.  The KNOT_LOG environment variable (off/info/debug) controls
logging verbosity.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import pipeline
from .curve_search import find_genus1_certificate, format_certificate
from .lattice import (
    GramLattice,
    find_embedding,
    format_embedding,
    min_embedding_dim,
)
from .matrices import parse_matrix_text
from .pipeline import render_json, report_to_dict, reports_to_csv
from .seifert import alexander, knot_determinant, signature
from .two_bridge import KnotParams, continued_fraction, crossing_count
from .matrices import symmetrize

log = logging.getLogger("knot")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _setup_logging():
    level = os.environ.get("KNOT_LOG", "off").lower()
    if level == "debug":
        logging.basicConfig(level=logging.DEBUG)
    elif level == "info":
        logging.basicConfig(level=logging.INFO)
    else:
        logging.basicConfig(level=logging.WARNING)


def _params(args) -> KnotParams:
    if args.m < 0:
        raise CliError("m must be >= 0")
    if args.n < 0:
        raise CliError("n must be >= 0")
    return KnotParams(args.m, args.n)


def _read_matrix(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}")
    try:
        return parse_matrix_text(text)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}")


def _print_report_human(r, out):
    print(f"K(m={r.params.m}, n={r.params.n})", file=out)
    cf = continued_fraction(r.params)
    print(f"  fraction            = {r.fraction.numerator}/{r.fraction.denominator}", file=out)
    print(f"  continued fraction  = {cf}", file=out)
    print(f"  crossings           = {crossing_count(r.params)}", file=out)
    print(f"  sigma = {r.signature}", file=out)
    print(f"  det = {r.determinant}", file=out)
    print(f"  alexander           = {r.alexander}", file=out)
    if r.gtop_lower == r.gtop_upper:
        print(f"  g_top = {r.gtop_lower}", file=out)
    else:
        print(f"  g_top in [{r.gtop_lower}, {r.gtop_upper}]", file=out)
    if r.gsm_lower == r.gsm_upper:
        print(f"  g_sm  = {r.gsm_lower}", file=out)
    else:
        print(f"  g_sm  in [{r.gsm_lower}, {r.gsm_upper}]", file=out)
    if r.curve_certificate is not None:
        print(f"  certificate: {format_certificate(r.curve_certificate)}", file=out)
    if r.embedding_verdict is not None:
        v = r.embedding_verdict
        print(f"  embedding at dim {v.tested_dim}: {v.embeddable}", file=out)
    for note in r.notes:
        print(f"  note: {note}", file=out)


def cmd_info(args) -> int:
    k = _params(args)
    report = pipeline.genus_bounds(k)
    if args.format == "json":
        sys.stdout.write(render_json(report_to_dict(report)))
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv([report]))
    else:
        _print_report_human(report, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.m_max < 0:
        raise CliError("m-max must be >= 0")
    if args.n_max < 0:
        raise CliError("n-max must be >= 0")
    reports = pipeline.verify_theorem(
        args.m_max,
        args.n_max,
        curve_bound=args.curve_bound,
        embed_cap_seconds=args.embed_cap_seconds,
        jobs=args.jobs,
    )
    if args.format == "json":
        sys.stdout.write(render_json([report_to_dict(r) for r in reports]))
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        for r in reports:
            _print_report_human(r, sys.stdout)
            print(file=sys.stdout)
    if any(not r.conclusive for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_lattice(args) -> int:
    mat = _read_matrix(args.gram_path)
    try:
        g = GramLattice(mat)
    except ValueError as exc:
        raise CliError(str(exc))
    try:
        if args.mindim:
            dim = min_embedding_dim(g, cap=args.cap)
            if dim is None:
                cap = args.cap if args.cap is not None else g.rank + 6
                print(f"NO EMBEDDING up to cap={cap}")
                return EXIT_INCONCLUSIVE
            print(f"MINDIM={dim}")
        else:
            witness = find_embedding(g, args.dim)
            if witness is None:
                print(f"NOT EMBEDDABLE dim={args.dim}")
            else:
                print(f"EMBEDDABLE dim={args.dim}")
                sys.stdout.write(format_embedding(witness))
    except ValueError as exc:
        raise CliError(str(exc))
    return EXIT_OK


def cmd_seifert(args) -> int:
    mat = _read_matrix(args.matrix_path)
    if args.sig:
        try:
            print(signature(symmetrize(mat)))
        except ValueError as exc:
            raise CliError(str(exc))
    if args.det:
        print(knot_determinant(mat))
    if args.alex:
        print(alexander(mat))
    return EXIT_OK


def cmd_curve(args) -> int:
    if args.bound is not None and args.bound < 1:
        raise CliError("bound must be >= 1")
    if args.matrix_path is not None:
        mat = _read_matrix(args.matrix_path)
        bound = args.bound if args.bound is not None else 3
    else:
        if args.m is None or args.n is None:
            raise CliError("provide either --matrix or both --m and --n")
        from .curve_search import default_search_bound
        from .two_bridge import seifert_matrix

        k = _params(args)
        mat = seifert_matrix(k)
        bound = args.bound if args.bound is not None else default_search_bound(k)
    cert = find_genus1_certificate(mat, bound)
    if cert is None:
        print(f"NONE within bound {bound}")
    else:
        print(format_certificate(cert))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="knot", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("info", parents=[], help="invariants and genus bounds, no searches")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["human", "json", "csv"], default="human")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", help="slice-genus verdicts over a parameter grid")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--curve-bound", type=int, default=None)
    p.add_argument("--embed-cap-seconds", type=float, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--format", choices=["human", "json", "csv"], default="human")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="embed a Gram lattice into Z^M")
    p.add_argument("gram_path")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--mindim", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("seifert", help="invariants of a Seifert matrix file")
    p.add_argument("matrix_path")
    p.add_argument("--sig", action="store_true")
    p.add_argument("--det", action="store_true")
    p.add_argument("--alex", action="store_true")
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("curve", help="search for a genus-1 reduction certificate")
    p.add_argument("--matrix", dest="matrix_path", default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_curve)

    return parser


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "lattice" and not args.mindim and args.dim is None:
        parser.error("lattice requires --dim or --mindim")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"knot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
