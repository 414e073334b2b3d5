"""Command-line interface.

Every command reads a polytope collection as JSON (see :mod:`.io`) and
writes JSON to standard output.  Exact rationals are written as strings.
Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Any, Sequence

from . import __version__
from .concurrency import set_default_workers
from .ehrhart import EhrhartValidationError, ehrhart, hstar, mixed_volume_table, multivariate_ehrhart
from .enumeration import count_points
from .geometry import GeometryError
from .io import CollectionSpec, InputError, dumps, loads
from .mixed import (
    ConsistencyError,
    HypothesisError,
    PolytopeCollection,
    me_from_multivariate,
    me_second,
    me_top,
    mixed_ehrhart,
    mixed_hstar,
)
from .polynomial import UnivariatePolynomial, format_rational, parse_rational
from .roots import NOT_FOUND, find_min_r, is_log_concave, is_real_rooted, is_unimodal, scan_dilates
from .suites import run_paper_suite, run_property_suite

log = logging.getLogger("mixed_ehrhart")

LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "trace": logging.DEBUG}


class CheckFailed(Exception):
    """Raised by a command whose output is valid but reports a failed check."""


def configure_logging() -> None:
    name = os.environ.get("MIXED_EHRHART_LOG", "quiet").strip().lower()
    level = LOG_LEVELS.get(name, logging.ERROR)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger("mixed_ehrhart").setLevel(level)


def _read_input(args: argparse.Namespace) -> CollectionSpec:
    if args.input is None:
        raise InputError("--input: a JSON collection file (or '-') is required")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"--input: cannot read {args.input!r}: {exc.strerror}") from None
    return loads(text)


def _collection(args: argparse.Namespace) -> PolytopeCollection:
    return _read_input(args).collection()


def _per_polytope(items: list[Any]) -> Any:
    return items[0] if len(items) == 1 else {"polytopes": items}


def _coeffs(p: UnivariatePolynomial, length: int | None = None) -> list[str]:
    values = p.padded(length) if length is not None else p.coefficients
    return [format_rational(x) for x in values]


# -- commands ----------------------------------------------------------------


def cmd_count(args):
    return _per_polytope([count_points(P).to_json() for P in _collection(args)])


def cmd_ehrhart(args):
    out = []
    for P in _collection(args):
        E = ehrhart(P, holdout=args.holdout)
        out.append({"dimension": E.dimension, "ehrhart": _coeffs(E.polynomial)})
    return _per_polytope(out)


def cmd_ehrhart_multi(args):
    c = _collection(args)
    E = multivariate_ehrhart(c.polytopes)
    return {"arity": c.k, "terms": E.to_json()}


def cmd_hstar(args):
    return _per_polytope([{"hstar": hstar(P).to_json()} for P in _collection(args)])


def cmd_mixedvol(args):
    c = _collection(args)
    return {"d": c.d, "k": c.k, "mixed_volumes": mixed_volume_table(c.polytopes).to_json()}


def _trace(result) -> list[dict]:
    return [t.to_json() for t in result.terms]


def cmd_dmv(args):
    c = _collection(args)
    res = mixed_ehrhart(c)
    out: dict[str, Any] = {"dmv": str(res.dmv)}
    if args.trace:
        out["terms"] = _trace(res)
    return out


def cmd_mixed_ehrhart(args):
    c = _collection(args)
    res = mixed_ehrhart(c)
    out: dict[str, Any] = {"coefficients": _coeffs(res.polynomial, c.d + 1), "dmv": str(res.dmv)}
    if args.trace:
        out["terms"] = _trace(res)
    return out


def cmd_mixed_hstar(args):
    c = _collection(args)
    h = mixed_hstar(c)
    return {"d": h.d, "hstar": h.to_json()}


def cmd_me_check(args):
    """Compare the mixed Ehrhart coefficients obtained along independent routes."""
    c = _collection(args)
    res = mixed_ehrhart(c)
    coeffs = res.coefficients
    checks = []

    def record(name, expected, computed):
        checks.append({"check": name, "expected": expected, "computed": computed, "pass": expected == computed})

    multi = me_from_multivariate(c)
    record("multivariate", _coeffs(res.polynomial, c.d + 1), [format_rational(x) for x in multi])
    record("vanishing", ["0"] * min(c.k, c.d + 1), [format_rational(x) for x in coeffs[: c.k]])
    if c.sum_dimension == c.d and c.k <= c.d:
        record("top", format_rational(coeffs[c.d]), format_rational(me_top(c)))
    if c.all_full_dimensional:
        record("second", format_rational(coeffs[c.d - 1]), format_rational(me_second(c)))
    ok = all(x["pass"] for x in checks)
    out = {"coefficients": _coeffs(res.polynomial, c.d + 1), "checks": checks, "pass": ok}
    if not ok:
        raise CheckFailed(out)
    return out


def _roots_report(p: UnivariatePolynomial) -> dict:
    coeffs = list(p.coefficients)
    out: dict[str, Any] = {"polynomial": _coeffs(p)}
    if p.is_zero():
        out.update({"real_rooted": None, "roots": []})
        return out
    out.update(is_real_rooted(p).to_json())
    out["log_concave"] = is_log_concave(coeffs)
    out["unimodal"] = is_unimodal(coeffs)
    return out


def cmd_roots(args):
    if args.poly is not None:
        try:
            coeffs = [parse_rational(x.strip()) for x in args.poly.split(",")]
        except (ValueError, ZeroDivisionError):
            raise InputError(f"--poly: expected comma-separated rationals, got {args.poly!r}") from None
        return _roots_report(UnivariatePolynomial(coeffs))
    h = mixed_hstar(_collection(args))
    out = _roots_report(h.polynomial())
    out["hstar"] = h.to_json()
    return out


def cmd_scan(args):
    reports = scan_dilates(_collection(args), args.rmax)
    return [r.to_json() for r in reports]


def cmd_find_r(args):
    r = find_min_r(_collection(args), args.rmax)
    return {"r": r, "r_max": args.rmax, "found": r != NOT_FOUND}


def cmd_verify_paper(args):
    ledger = run_paper_suite()
    out = ledger.to_json()
    if not ledger.passed:
        raise CheckFailed(out)
    return out


def cmd_verify_props(args):
    ledger = run_property_suite(args.seed, args.cases)
    out = ledger.to_json()
    out["seed"] = args.seed
    if not ledger.passed:
        raise CheckFailed(out)
    return out


# -- dispatch ------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="JSON collection; '-' reads standard input")
    common.add_argument("--output", metavar="FILE", help="write the result here instead of standard output")
    common.add_argument("--trace", action="store_true", help="include per-subset intermediate data")
    common.add_argument("--parallel", type=_positive, default=1, metavar="N", help="worker threads for independent counts")
    common.add_argument("--seed", type=int, default=1, metavar="S", help="seed for randomized commands")

    parser = argparse.ArgumentParser(prog="mixed-ehrhart", description="Mixed Ehrhart theory of lattice polytopes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text, aliases=()):
        p = sub.add_parser(name, parents=[common], help=help_text, aliases=list(aliases))
        p.set_defaults(func=fn)
        return p

    add("count", cmd_count, "lattice points and interior lattice points")
    p = add("ehrhart", cmd_ehrhart, "Ehrhart polynomial of each polytope")
    p.add_argument("--holdout", type=int, default=2, help="extra dilates checked against the interpolant")
    add("ehrhart-multi", cmd_ehrhart_multi, "multivariate Ehrhart polynomial", aliases=("mehrhart-multi",))
    add("hstar", cmd_hstar, "h*-vector of each polytope")
    add("mixedvol", cmd_mixedvol, "table of mixed volumes")
    add("dmv", cmd_dmv, "discrete mixed volume")
    add("mixed-ehrhart", cmd_mixed_ehrhart, "mixed Ehrhart polynomial")
    add("mixed-hstar", cmd_mixed_hstar, "mixed h*-vector")
    add("me-check", cmd_me_check, "cross-check mixed Ehrhart coefficients")
    p = add("roots", cmd_roots, "real-rootedness of the mixed h*-polynomial or of --poly")
    p.add_argument("--poly", metavar="C0,C1,...", help="coefficients in increasing degree")
    p = add("scan", cmd_scan, "diagnostics of dilates r = 1..rmax (JSON lines)")
    p.add_argument("--rmax", type=_positive, required=True)
    p = add("find-r", cmd_find_r, "smallest r from which all diagnostics hold up to rmax")
    p.add_argument("--rmax", type=_positive, required=True)
    add("verify-paper", cmd_verify_paper, "recompute the reference example values")
    p = add("verify-props", cmd_verify_props, "randomized property suite")
    p.add_argument("--cases", type=_positive, default=50)
    return parser


def _emit(args: argparse.Namespace, result: Any) -> None:
    if args.command == "scan":
        text = "".join(dumps(r) + "\n" for r in result)
    else:
        text = dumps(result) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    set_default_workers(args.parallel)
    try:
        result = args.func(args)
    except CheckFailed as exc:
        _emit(args, exc.args[0])
        return 1
    except (InputError, GeometryError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, EhrhartValidationError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    finally:
        set_default_workers(1)
    _emit(args, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
