"""Command line front end: ``table``, ``inspect`` and ``verify``.

Exit codes: 0 success or pass, 1 verification failure (or, for
``inspect``, a partition outside Q(m,n)), 2 usage error.

JSON output is always one object with the keys ``command``,
``parameters`` and either ``generated_rows`` (tables) or ``report``.
CSV output starts with a header row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import stats, verify
from .classify import classify_P, in_P, in_Q
from .durfee import from_symbol, to_symbol
from .injections import Phi, inverse_of
from .partitions import count_partitions, format_partition, parse_partition
from .spt import N_S_mod, ns_table, spt

log = logging.getLogger("sptcrank")

TABLE_KINDS = ("rank", "crank", "rankset-q", "p-rank", "ns", "spt", "moments")
SUITES = ("conjecture", "injection", "identities", "moments", "spt", "spt-crank", "all")


class UsageError(Exception):
    pass


def _emit(command, parameters, fmt, rows=None, report=None, out=None):
    out = out or sys.stdout
    if fmt == "json":
        doc = {"command": command, "parameters": parameters}
        if report is not None:
            doc["report"] = report
        else:
            doc["generated_rows"] = rows
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        header = list(rows[0])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row[h]) for h in header])
    out.write(buf.getvalue())


def _cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return value


# table --------------------------------------------------------------------

def _n_range(args, lo):
    if args.n is not None:
        if args.n < lo:
            raise UsageError(f"--n must be at least {lo} for this table")
        return [args.n]
    return list(range(lo, args.max_n + 1))


def _m_range(args, n, symmetric):
    if args.m is not None:
        return [args.m]
    top = n if args.max_m is None else args.max_m
    return list(range(-top if symmetric else 0, top + 1))


def table_rows(args) -> list:
    kind = args.kind
    rows = []
    if kind in ("rank", "crank"):
        for n in _n_range(args, 0):
            for m in _m_range(args, n, symmetric=True):
                value = stats.N(m, n) if kind == "rank" else stats.M(m, n)
                rows.append({"n": n, "m": m, "N" if kind == "rank" else "M": value})
    elif kind in ("rankset-q", "p-rank"):
        for n in _n_range(args, 0):
            for m in _m_range(args, n, symmetric=False):
                if m < 0:
                    raise UsageError("m must be non-negative for this table")
                if kind == "rankset-q":
                    rows.append({"n": n, "m": m, "q": stats.q_count(m, n)})
                else:
                    rows.append({"n": n, "m": m, "p_rank_at_least_minus_m": stats.p_rank_at_least(m, n)})
    elif kind == "ns":
        for n in _n_range(args, 1):
            if args.mod is not None:
                for k in range(args.mod):
                    rows.append({"n": n, "k": k, "t": args.mod, "N_S": N_S_mod(k, args.mod, n)})
                continue
            table = ns_table(n)
            for m in _m_range(args, n, symmetric=True):
                rows.append({"n": n, "m": m, "N_S": table.get(m, 0)})
    elif kind == "spt":
        for n in _n_range(args, 1):
            rows.append({"n": n, "spt": spt(n)})
    elif kind == "moments":
        for n in _n_range(args, 1):
            for k in range(1, args.max_k + 1):
                rows.append({
                    "n": n,
                    "k": k,
                    "N_k": stats.rank_moment(k, n),
                    "M_k": stats.crank_moment(k, n),
                    "Nbar_k": stats.positive_rank_moment(k, n),
                    "Mbar_k": stats.positive_crank_moment(k, n),
                })
    return rows


def cmd_table(args) -> int:
    if args.mod is not None and args.kind != "ns":
        raise UsageError("--mod only applies to the ns table")
    if args.mod is not None and args.mod < 1:
        raise UsageError("--mod must be positive")
    rows = table_rows(args)
    params = {"kind": args.kind, "n": args.n, "max_n": args.max_n, "m": args.m, "max_m": args.max_m}
    if args.kind == "ns":
        params["mod"] = args.mod
    if args.kind == "moments":
        params["max_k"] = args.max_k
    _emit("table", params, args.format, rows=rows)
    return 0


# inspect ------------------------------------------------------------------

def inspect_partition(la, m) -> dict:
    sym = to_symbol(la, m)
    n = sum(la)
    doc = {
        "partition": format_partition(la),
        "n": n,
        "m": m,
        "p": count_partitions(n),
        "symbol": str(sym),
        "symbol_parts": sym.to_dict(),
        "rank": stats.rank(la) if la else None,
        "crank": stats.crank(la) if la else None,
        "in_Q": in_Q(sym),
        "in_P": in_P(sym),
    }
    if doc["in_P"]:
        doc["P_class"] = str(classify_P(sym))
    if not doc["in_Q"]:
        return doc
    trace = Phi(sym)
    back = inverse_of(trace)
    doc["Q_class"] = str(trace.source_class)
    doc["image"] = str(trace.image)
    doc["image_partition"] = format_partition(from_symbol(trace.image))
    doc["trace"] = trace.to_dict()
    doc["inverse_trace"] = back.to_dict()
    return doc


def cmd_inspect(args) -> int:
    if args.m < 0:
        raise UsageError("--m must be non-negative")
    try:
        la, reordered = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if reordered:
        log.warning("parts reordered to %s", format_partition(la))
    doc = inspect_partition(la, args.m)
    params = {"partition": args.partition, "m": args.m}
    if args.format == "json":
        _emit("inspect", params, "json", report=doc)
    else:
        rows = [{"field": k, "value": v} for k, v in doc.items()]
        _emit("inspect", params, "csv", rows=rows)
    if not doc["in_Q"]:
        log.warning("%s is not in Q(%d,%d)", doc["partition"], args.m, doc["n"])
        return 1
    return 0


# verify -------------------------------------------------------------------

def run_suite(args) -> verify.VerificationReport:
    w = args.workers
    suite = args.suite
    if suite == "conjecture":
        return verify.verify_conjecture(args.max_n, _max_m(args), w)
    if suite == "injection":
        lo_n, hi_n = (args.n, args.n) if args.n is not None else (1, args.max_n)
        lo_m, hi_m = (args.m, args.m) if args.m is not None else (0, _max_m(args))
        if lo_n == hi_n and lo_m == hi_m:
            return verify.verify_injection(lo_m, lo_n, args.detail)
        return verify.verify_injections(hi_n, hi_m, lo_n, lo_m, args.detail, w)
    if suite == "identities":
        return verify.verify_identities(args.max_n, w)
    if suite == "moments":
        return verify.verify_moments(args.max_k, args.max_n, w)
    if suite == "spt":
        return verify.verify_spt(args.max_n, w)
    if suite == "spt-crank":
        return verify.verify_spt_crank(args.max_n, w)
    return verify.verify_all(args.max_n, _max_m(args), args.max_k, w)


def _max_m(args):
    return args.max_m if args.max_m is not None else 8


def cmd_verify(args) -> int:
    if args.workers < 1:
        raise UsageError("--workers must be positive")
    if args.suite != "injection" and (args.n is not None or args.m is not None):
        raise UsageError("--n and --m only apply to the injection suite")
    report = run_suite(args)
    log.info("%s: %s in %.2fs", report.check, report.status, report.elapsed)
    params = {
        "suite": args.suite,
        "max_n": args.max_n,
        "max_m": _max_m(args),
        "max_k": args.max_k,
        "n": args.n,
        "m": args.m,
        "detail": args.detail,
    }
    if args.format == "json":
        _emit("verify", params, "json", report=report.to_dict())
    else:
        rows = [
            {
                "check": c.get("check", report.check),
                "claim": c["name"],
                "lattice": c["lattice"],
                "cases": c["cases"],
                "failures": c["failures"],
                "status": "fail" if c["failures"] else "pass",
            }
            for c in report.claims
        ]
        _emit("verify", params, "csv", rows=rows)
    for w in report.counterexamples[:5]:
        log.error("counterexample: %s", json.dumps(w))
    return 0 if report.passed else 1


# parser -------------------------------------------------------------------

def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sptcrank", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a table of counts")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--max-n", type=_nonneg, default=10)
    table.add_argument("--max-m", type=_nonneg, default=None, help="default: n")
    table.add_argument("--n", type=_nonneg, default=None)
    table.add_argument("--m", type=int, default=None)
    table.add_argument("--mod", type=int, default=None, help="ns only: group m by residue")
    table.add_argument("--max-k", type=_nonneg, default=6, help="moments only")
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.set_defaults(func=cmd_table)

    ins = sub.add_parser("inspect", help="symbol, class and Phi image of one partition")
    ins.add_argument("partition", help='comma separated parts, e.g. "5,4,2,1"; "" or - for the empty partition')
    ins.add_argument("--m", type=int, default=0)
    ins.add_argument("--format", choices=("csv", "json"), default="json")
    ins.set_defaults(func=cmd_inspect)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--max-n", type=_nonneg, default=30)
    ver.add_argument("--max-m", type=_nonneg, default=None, help="default 8")
    ver.add_argument("--max-k", type=_nonneg, default=6)
    ver.add_argument("--n", type=_nonneg, default=None, help="injection only: a single n")
    ver.add_argument("--m", type=_nonneg, default=None, help="injection only: a single m")
    ver.add_argument("--detail", action="store_true", help="injection only: include every trace")
    ver.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ver.add_argument("--format", choices=("csv", "json"), default="json")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, OverflowError) as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
