"""Command-line interface.

Exit status: 0 success, 1 usage error, 2 invalid input, 3 refused because a
resource limit would be exceeded.  Reports go to standard output as JSON
with sorted keys and reals rounded to 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import isqrt

from . import __version__
from .algebra import (DEFAULT_MAX_DEGREE_LIMIT, associated_digraph, dimension,
                      entropy_upper_from_dims, format_algebra, hilbert_prefix,
                      parse_algebra)
from .bounds import (BoundReport, figure_csv, figure_data, format_real,
                     friedland_bound, rho_mpq)
from .errors import ResourceLimitError, ValidationError
from .extremal import build_G, build_special, presentation
from .graph import format_matrix, parse_matrix
from .search import DEFAULT_BUDGET, SearchResult, max_spectral_radius
from .spectral import DEFAULT_TOL, char_poly, spectral_radius

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass(frozen=True)
class AnalysisReport:
    letters: int
    forbidden_count: int
    a2: int
    bound: BoundReport
    spectral_radius: float
    hilbert_prefix: tuple[int, ...]
    entropy_upper_from_dims: float
    tolerance: float


def analyze(alg, max_degree=30, tol=DEFAULT_TOL, degree_limit=DEFAULT_MAX_DEGREE_LIMIT):
    a2 = dimension(alg, 2)
    prefix = hilbert_prefix(alg, max_degree, limit=degree_limit)
    return AnalysisReport(
        letters=alg.alphabet_size,
        forbidden_count=len(alg.forbidden),
        a2=a2,
        bound=friedland_bound(a2, tol=tol),
        spectral_radius=spectral_radius(associated_digraph(alg), tol).value,
        hilbert_prefix=prefix.dims,
        entropy_upper_from_dims=entropy_upper_from_dims(prefix) if max_degree >= 1 else None,
        tolerance=tol,
    )


def bound_to_dict(report):
    dec = report.decomposition
    out = {
        "k": dec.k,
        "m": dec.m,
        "ell": dec.ell,
        "sqrt_k": report.sqrt_k,
        "certified": report.certified,
        "asymptotic_assumed": report.asymptotic_assumed,
        "notes": list(report.notes),
    }
    for key in ("f_k", "special_case_bound", "rho_reference"):
        value = getattr(report, key)
        if value is not None:
            out[key] = value
    return out


def to_jsonable(report):
    if isinstance(report, BoundReport):
        return bound_to_dict(report)
    if isinstance(report, SearchResult):
        return report.to_dict()
    if isinstance(report, AnalysisReport):
        return {
            "letters": report.letters,
            "forbidden_count": report.forbidden_count,
            "a2": report.a2,
            "bound": bound_to_dict(report.bound),
            "spectral_radius": report.spectral_radius,
            "hilbert_prefix": list(report.hilbert_prefix),
            "entropy_upper_from_dims": report.entropy_upper_from_dims,
            "tolerance": report.tolerance,
        }
    return report


def _round_reals(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(format_real(obj))
    if isinstance(obj, dict):
        return {k: _round_reals(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_reals(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def emit_report(report):
    """Stable JSON text for any report type (or a plain dict)."""
    return json.dumps(_round_reals(to_jsonable(report)), sort_keys=True, indent=2) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="gradedentropy",
                     description="Entropy bounds for quadratic monomial algebras.")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="root-finding tolerance (default 1e-9)")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="bounds for dim A_2 = K")
    p.add_argument("k", type=int)
    p.add_argument("--assume-asymptotic", action="store_true",
                   help="also certify the cubic-root bound")

    p = sub.add_parser("rho", help="largest root of t^3 - m t^2 - p t + m p - p q")
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("analyze", help="analyse an algebra file")
    p.add_argument("--algebra", required=True, metavar="FILE")
    p.add_argument("--max-degree", type=int, default=30, metavar="N")
    p.add_argument("--degree-limit", type=int, default=DEFAULT_MAX_DEGREE_LIMIT,
                   help="refuse --max-degree above this")

    p = sub.add_parser("spectral", help="spectral radius and characteristic polynomial")
    p.add_argument("--matrix", required=True, metavar="FILE")

    p = sub.add_parser("search", help="exhaustive spectral-radius maximisation")
    p.add_argument("k", type=int)
    p.add_argument("--dim", type=int, default=None, metavar="D",
                   help="matrix size (default: ceil(sqrt(K)))")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum number of matrices to enumerate")
    p.add_argument("--no-prune", action="store_true",
                   help="evaluate every matrix, not one per similarity class")

    p = sub.add_parser("figure", help="CSV of sqrt(k) - f(k) and sqrt(k) - rho")
    p.add_argument("--kmin", type=int, default=5)
    p.add_argument("--kmax", type=int, default=85)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("extremal", help="print an extremal digraph or its algebra")
    ext = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name, what in (("G", "adjacency matrix of G(m, p, q)"),
                       ("A", "algebra file presenting G(m, p, q)")):
        e = ext.add_parser(name, help=what)
        e.add_argument("m", type=int)
        e.add_argument("p", type=int)
        e.add_argument("q", type=int)
    e = ext.add_parser("special", help="the (m+1)^2 - 4 edge graph")
    e.add_argument("m", type=int)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _default_dim(k):
    r = isqrt(k)
    return r if r * r == k else r + 1


def _dispatch(args, out):
    tol = args.tol
    if not tol > 0:
        raise ValidationError("--tol must be positive")
    cmd = args.command
    if cmd == "bound":
        if args.k < 0:
            raise ValidationError("K must be nonnegative")
        out.write(emit_report(friedland_bound(args.k, args.assume_asymptotic, tol)))
    elif cmd == "rho":
        out.write(format_real(rho_mpq(args.m, args.p, args.q, tol)) + "\n")
    elif cmd == "analyze":
        alg = parse_algebra(_read(args.algebra))
        if args.max_degree < 0:
            raise ValidationError("--max-degree must be nonnegative")
        out.write(emit_report(analyze(alg, args.max_degree, tol, args.degree_limit)))
    elif cmd == "spectral":
        g = parse_matrix(_read(args.matrix))
        res = spectral_radius(g, tol)
        out.write(emit_report({
            "vertices": g.vertex_count,
            "edges": g.edge_count,
            "spectral_radius": res.value,
            "char_poly_h": list(char_poly(g).h),
            "tolerance": tol,
            "trace": list(res.trace),
        }))
    elif cmd == "search":
        d = args.dim if args.dim is not None else _default_dim(args.k)
        res = max_spectral_radius(args.k, d, tol, budget=args.budget,
                                  prune=not args.no_prune)
        out.write(emit_report(res))
    elif cmd == "figure":
        text = figure_csv(figure_data(args.kmin, args.kmax, tol))
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
    elif cmd == "extremal":
        if args.family == "G":
            out.write(format_matrix(build_G(args.m, args.p, args.q)))
        elif args.family == "A":
            out.write(format_algebra(presentation(args.m, args.p, args.q)))
        else:
            out.write(format_matrix(build_special(args.m)))


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _dispatch(args, out)
    except ResourceLimitError as exc:
        print(f"gradedentropy: refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValidationError as exc:
        print(f"gradedentropy: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
