"""Command-line front end.

    mseqcorr field-info --k 5
    mseqcorr xcorr --k 3 --d 3 --dist
    mseqcorr search --k 9
    mseqcorr verify --k 5 --suite lemma1,theorem1
    mseqcorr table1 --max-m 18

Exit status is 0 when every requested check passes, 1 on a verification
failure and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import verify
from .errors import MseqcorrError
from .field import build_field, elem_hex, load_moduli_config, parse_hex
from .sequences import crosscorr_all, crosscorr_distribution

DEFAULT_SEARCH_MAX_K = 11
LONG_RUN_MAX_K = 13
DEFAULT_TABLE_MAX_M = 18


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, need_k: bool = True):
    if need_k:
        p.add_argument("--k", type=int, required=True, help="half degree; the field is GF(2^(2k))")
    p.add_argument("--modulus", help="primitive modulus of degree 2k, hex bit pattern")
    p.add_argument("--config", help="file of '<m> <hex>' modulus overrides")
    p.add_argument("--format", choices=("json", "csv", "text"), default=None)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--timing", action="store_true", help="include wall-clock times")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mseqcorr", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe the field and its distinguished elements")
    _common(p)

    p = sub.add_parser("xcorr", help="crosscorrelation values or their distribution")
    _common(p)
    p.add_argument("--d", type=int, required=True, help="decimation, coprime to 2^k - 1")
    p.add_argument("--dist", action="store_true", help="print the value distribution")

    p = sub.add_parser("search", help="scan all coprime decimation classes for three-valued spectra")
    _common(p)
    p.add_argument("--long-run", action="store_true", help=f"allow k = {LONG_RUN_MAX_K}")

    p = sub.add_parser("verify", help="run named verification suites")
    _common(p)
    p.add_argument("--suite", required=True, help="comma separated: " + ",".join(verify.SUITE_NAMES))
    p.add_argument("--l", type=int, default=None, help="restrict to one l (default: every valid l)")

    p = sub.add_parser("table1", help="three-valued decimations for every odd k with 2k <= max-m")
    _common(p, need_k=False)
    p.add_argument("--max-m", type=int, default=DEFAULT_TABLE_MAX_M)
    p.add_argument("--long-run", action="store_true", help="allow m above 18")
    return parser


def _ctx(args, k=None):
    k = args.k if k is None else k
    overrides = load_moduli_config(args.config) if args.config else None
    modulus = parse_hex(args.modulus) if args.modulus else None
    return build_field(k, modulus, overrides=overrides)


def _emit(out, text: str):
    out.write(text if text.endswith("\n") else text + "\n")


# -- subcommands ------------------------------------------------------------------------


def cmd_field_info(args, out) -> int:
    ctx = _ctx(args)
    info = {
        "k": ctx.k,
        "m": ctx.m,
        "modulus": elem_hex(ctx.modulus),
        "alpha": elem_hex(ctx.alpha),
        "beta": elem_hex(ctx.beta),
        "r": None if ctx.r is None else elem_hex(ctx.r),
        "tables": ctx.has_tables,
        "long_period": ctx.n,
        "short_period": ctx.sub_order,
    }
    fmt = args.format or "text"
    if fmt == "json":
        _emit(out, json.dumps(info))
    elif fmt == "csv":
        _emit(out, "\n".join(f"{key},{v}" for key, v in info.items()))
    else:
        _emit(out, "\n".join(f"{key:<13}{v}" for key, v in info.items()))
    return 0


def cmd_xcorr(args, out) -> int:
    ctx = _ctx(args)
    fmt = args.format or "csv"
    if args.dist:
        dist = crosscorr_distribution(ctx, args.d)
        if fmt == "json":
            _emit(out, json.dumps({"k": ctx.k, "d": args.d, **dist.to_dict()}))
        elif fmt == "csv":
            _emit(out, dist.to_csv())
        else:
            _emit(out, "\n".join(f"{v:>10}  x{c}" for v, c in dist.entries.items()))
        return 0
    values = [int(v) for v in crosscorr_all(ctx, args.d)]
    if fmt == "json":
        _emit(out, json.dumps({"k": ctx.k, "d": args.d, "values": values}))
    elif fmt == "csv":
        _emit(out, "\n".join(f"{tau},{v}" for tau, v in enumerate(values)))
    else:
        _emit(out, "\n".join(f"tau={tau:<6}{v}" for tau, v in enumerate(values)))
    return 0


def _check_search_k(k: int, long_run: bool):
    if k > LONG_RUN_MAX_K:
        raise UsageError(f"search supports k <= {LONG_RUN_MAX_K}")
    if k > DEFAULT_SEARCH_MAX_K and not long_run:
        raise UsageError(f"k={k} needs --long-run")


def _search_dict(res: verify.SearchResult, elapsed: float | None) -> dict:
    out = {
        "k": res.k,
        "m": 2 * res.k,
        "classes_scanned": res.n_classes,
        "found": res.found_reps,
        "predicted": res.predicted_reps,
        "conjecture_holds": res.conjecture_holds,
        "distributions_match": res.distributions_match,
        "distributions": {str(d): [[v, c] for v, c in res.distributions[d].entries.items()] for d in res.found_reps},
    }
    if elapsed is not None:
        out["wall_time_ms"] = round(elapsed * 1000, 3)
    return out


def cmd_search(args, out) -> int:
    _check_search_k(args.k, args.long_run)
    ctx = _ctx(args)
    t0 = time.perf_counter()
    res = verify.search_three_valued(ctx, threads=args.threads)
    elapsed = time.perf_counter() - t0 if args.timing else None
    d = _search_dict(res, elapsed)
    fmt = args.format or "text"
    if fmt == "json":
        _emit(out, json.dumps(d))
    elif fmt == "csv":
        _emit(out, "\n".join(f"{rep},{int(rep in d['predicted'])}" for rep in d["found"]))
    else:
        lines = [
            f"k={d['k']} m={d['m']}: {d['classes_scanned']} coprime classes scanned",
            f"three-valued: {' '.join(map(str, d['found'])) or '-'}",
            f"predicted:    {' '.join(map(str, d['predicted']))}",
            f"conjecture holds: {d['conjecture_holds']}",
            f"distributions match: {d['distributions_match']}",
        ]
        if elapsed is not None:
            lines.append(f"time: {elapsed:.2f} s")
        _emit(out, "\n".join(lines))
    return 0 if res.conjecture_holds and res.distributions_match else 1


def cmd_verify(args, out) -> int:
    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    if not names:
        raise UsageError("--suite is empty")
    ctx = _ctx(args)
    reports = verify.run_suite(ctx, names, l=args.l, threads=args.threads)
    fmt = args.format or "text"
    if fmt == "json":
        _emit(out, json.dumps([r.to_dict(timing=args.timing) for r in reports]))
    elif fmt == "csv":
        _emit(out, "\n".join(f"{r.theorem},{r.k},{'pass' if r.passed else 'fail'},{r.checked},{len(r.details)}" for r in reports))
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.theorem} k={r.k} checked={r.checked}"
            if r.info:
                line += " " + json.dumps(r.info, sort_keys=True)
            if args.timing:
                line += f" ({r.wall_time_ms:.1f} ms)"
            lines.append(line)
            lines += ["    " + json.dumps(c) for c in r.details]
        _emit(out, "\n".join(lines))
    return 0 if all(r.passed for r in reports) else 1


def cmd_table1(args, out) -> int:
    if args.max_m > 2 * LONG_RUN_MAX_K:
        raise UsageError(f"--max-m above {2 * LONG_RUN_MAX_K} is not supported")
    if args.max_m > DEFAULT_TABLE_MAX_M and not args.long_run:
        raise UsageError(f"--max-m {args.max_m} needs --long-run")
    rows = []
    for k in range(3, args.max_m // 2 + 1, 2):
        args.k = k
        res = verify.search_three_valued(_ctx(args), threads=args.threads)
        rows.append(verify.table1_row(res))
    fmt = args.format or "text"
    if fmt == "json":
        _emit(out, json.dumps(rows))
    elif fmt == "csv":
        body = ["m,first,second,others"]
        for r in rows:
            body.append(f"{r['m']},{r['first'] or ''},{r['second'] or ''},{' '.join(map(str, r['others']))}")
        _emit(out, "\n".join(body))
    else:
        body = [f"{'m':>4} {'(2^k+1)/3':>10} {'2^((k+1)/2)-1':>14}  others"]
        for r in rows:
            first = r["first"] if r["first"] is not None else "-"
            second = r["second"] if r["second"] is not None else "-"
            body.append(f"{r['m']:>4} {first:>10} {second:>14}  {', '.join(map(str, r['others']))}")
        _emit(out, "\n".join(body))
    return 0 if all(r["conjecture_holds"] for r in rows) else 1


COMMANDS = {
    "field-info": cmd_field_info,
    "xcorr": cmd_xcorr,
    "search": cmd_search,
    "verify": cmd_verify,
    "table1": cmd_table1,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("mseqcorr: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, MseqcorrError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"mseqcorr {args.command}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
