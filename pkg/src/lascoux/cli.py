"""Command-line front end.

    lascoux psi --set 0,3
    lascoux lp --set 0,1,2 --route pfaffian --eval 3
    lascoux phi --d 3 --eval 0,-1 --format json
    lascoux table --dmax 20
    lascoux verify --suite all

Exit status: 0 success, 1 a verification failed, 2 usage or input error.
The psi cache path comes from ``--cache`` or else $LASCOUX_PSI_CACHE.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .errors import (
    CacheFormatError,
    InvalidIndexSet,
    LascouxError,
    UnsupportedSize,
)
from .identity_suite import SUITES, rat, run_suite
from .lascoux_poly import Route, lp_poly
from .ml_degree import phi_poly
from .psi_engine import IndexSet, append_cache, default_table, load_cache, psi

CACHE_ENV = "LASCOUX_PSI_CACHE"
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("lascoux")


class UsageError(Exception):
    pass


def _index_set(flag: str, text: str) -> IndexSet:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    try:
        return IndexSet(int(p) for p in parts)
    except (ValueError, InvalidIndexSet) as exc:
        raise UsageError(f"{flag}: {text!r} is not a strictly increasing list of "
                         f"non-negative integers ({exc})") from None


def _int_list(flag: str, text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"{flag}: {text!r} is not a comma-separated list of integers") from None


def _threads(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer or 'auto'")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default=None,
                        help="output format (default: plain, csv for 'table')")
    common.add_argument("--cache", metavar="PATH",
                        help=f"JSON-lines psi cache (default: ${CACHE_ENV})")
    common.add_argument("--threads", type=_threads, default=1, metavar="N|auto")
    common.add_argument("--stats", action="store_true",
                        help="report psi cache counters on stderr")

    parser = argparse.ArgumentParser(prog="lascoux", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", parents=[common], help="Lascoux coefficient of a set")
    p.add_argument("--set", dest="set", required=True, metavar="a,b,c")

    p = sub.add_parser("lp", parents=[common], help="Lascoux polynomial of a set")
    p.add_argument("--set", dest="set", required=True, metavar="a,b,c")
    p.add_argument("--route", choices=("interp", "pfaffian", "closed"), default="interp")
    p.add_argument("--eval", dest="eval", metavar="n1,n2,...")

    p = sub.add_parser("phi", parents=[common], help="ML-degree polynomial phi(n, d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--eval", dest="eval", metavar="n1,n2,...")

    p = sub.add_parser("table", parents=[common], help="phi(., d) for d = 1..dmax")
    p.add_argument("--dmax", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--dmax", type=int, default=None,
                   help="override every selected suite's range")
    return parser


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_psi(args, fmt):
    I = _index_set("--set", args.set)
    value = psi(I)
    if fmt == "json":
        return _json({"set": list(I), "psi": str(value)}), EXIT_OK
    if fmt == "csv":
        return _csv([("set", "psi"), (",".join(map(str, I)), value)]), EXIT_OK
    return f"{value}\n", EXIT_OK


def cmd_lp(args, fmt):
    I = _index_set("--set", args.set)
    if not I:
        raise UsageError("--set: the Lascoux polynomial needs a non-empty set")
    points = _int_list("--eval", args.eval) if args.eval else []
    try:
        lp = lp_poly(I, Route.parse(args.route))
    except UnsupportedSize as exc:
        raise UsageError(f"--route closed: {exc}") from None
    coeffs = [rat(c) for c in lp.poly.coeffs]
    evals = {n: lp.poly(n) for n in points}
    if fmt == "json":
        doc = {"set": list(I), "route": lp.route.value, "coefficients": coeffs,
               "evaluations": {str(n): rat(v) for n, v in evals.items()}}
        return _json(doc), EXIT_OK
    if fmt == "csv":
        rows = [("term", "value")] + [(f"c{k}", c) for k, c in enumerate(coeffs)]
        rows += [(f"LP({n})", rat(v)) for n, v in evals.items()]
        return _csv(rows), EXIT_OK
    out = f"LP_{{{','.join(map(str, I))}}}(n) = {lp.poly}\ncoefficients: {' '.join(coeffs)}\n"
    out += "".join(f"LP({n}) = {rat(v)}\n" for n, v in evals.items())
    return out, EXIT_OK


def cmd_phi(args, fmt):
    if args.d < 1:
        raise UsageError("--d: must be a positive integer")
    points = _int_list("--eval", args.eval) if args.eval else []
    result = phi_poly(args.d, points)
    coeffs = [rat(c) for c in result.phi.coeffs]
    if fmt == "json":
        doc = {"d": result.d, "coefficients": coeffs,
               "evaluations": {str(n): rat(v) for n, v in result.evaluations.items()}}
        return _json(doc), EXIT_OK
    if fmt == "csv":
        rows = [("term", "value")] + [(f"c{k}", c) for k, c in enumerate(coeffs)]
        rows += [(f"phi({n})", rat(v)) for n, v in result.evaluations.items()]
        return _csv(rows), EXIT_OK
    out = f"phi(n, {result.d}) = {result.phi}\ncoefficients: {' '.join(coeffs)}\n"
    out += "".join(f"phi({n}) = {rat(v)}\n" for n, v in result.evaluations.items())
    return out, EXIT_OK


def cmd_table(args, fmt, threads):
    if args.dmax < 1:
        raise UsageError("--dmax: must be a positive integer")
    ds = range(1, args.dmax + 1)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        polys = list(pool.map(lambda d: phi_poly(d).phi, ds))
    width = max(len(p.coeffs) for p in polys)
    if fmt == "json":
        doc = [{"d": d, "coefficients": [rat(c) for c in p.coeffs],
                "phi_at_0": rat(p(0)), "phi_at_minus_1": rat(p(-1))}
               for d, p in zip(ds, polys)]
        return _json(doc), EXIT_OK
    header = ["d", *(f"c{k}" for k in range(width)), "phi(0)", "phi(-1)"]
    rows = [header]
    for d, p in zip(ds, polys):
        cs = [rat(c) for c in p.coeffs]
        rows.append([d, *cs, *[""] * (width - len(cs)), rat(p(0)), rat(p(-1))])
    return _csv(rows), EXIT_OK


def cmd_verify(args, fmt, threads):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.dmax is not None and args.dmax < 0:
        raise UsageError("--dmax: must be non-negative")
    reports = [run_suite(name, args.dmax, workers=threads) for name in names]
    ok = all(r.passed for r in reports)
    code = EXIT_OK if ok else EXIT_FAILED
    if fmt == "json":
        return _json({"passed": ok, "reports": [r.to_json() for r in reports]}), code
    if fmt == "csv":
        rows = [("suite", "checked", "failures", "passed")]
        rows += [(r.suite, r.checked, len(r.failures), r.passed) for r in reports]
        return _csv(rows), code
    return "".join(r.summary() + "\n" for r in reports), code


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    fmt = args.format or ("csv" if args.command == "table" else "plain")
    cache = args.cache or os.environ.get(CACHE_ENV)
    try:
        if cache and os.path.exists(cache):
            loaded = load_cache(cache, default_table)
            log.debug("loaded %d psi records from %s", loaded, cache)
        if args.command == "psi":
            out, code = cmd_psi(args, fmt)
        elif args.command == "lp":
            out, code = cmd_lp(args, fmt)
        elif args.command == "phi":
            out, code = cmd_phi(args, fmt)
        elif args.command == "table":
            out, code = cmd_table(args, fmt, args.threads)
        else:
            out, code = cmd_verify(args, fmt, args.threads)
    except (UsageError, CacheFormatError, InvalidIndexSet) as exc:
        print(f"lascoux {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except LascouxError as exc:
        print(f"lascoux {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED

    stdout.write(out)
    appended = append_cache(cache, default_table) if cache else 0
    if args.stats:
        t = default_table
        print(f"psi cache: entries={len(t)} hits={t.hits} misses={t.misses} "
              f"appended={appended}", file=stderr)
    return code


def main() -> None:
    logging.basicConfig(level=os.environ.get("LASCOUX_LOG", "WARNING"))
    sys.exit(run())


if __name__ == "__main__":
    main()
