"""Command-line interface: coefficients, degrees, sweeps, and certificates.

Exit codes: 0 on success or a verified sweep, 1 when a sweep found
mismatches or a demanded certificate is absent, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as _cache
from .cb import cb_c1_degree_m04, cb_dot_fcurve, cb_rank
from .gw import gw_divisor_degree_m04, gw_dot_fcurve
from .moduli import parse_fcurve
from .partitions import Box, parse_partition, parse_partition_list
from .quantum import quantum_lr_coefficient
from .schur import generalized_lr
from .verify import SearchStatus, nonvanishing_certificate, sweep_conjecture


def _emit(args, human: str, obj: dict) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(human)


def _cmd_lr(args) -> int:
    nu = parse_partition(args.nu)
    lams = parse_partition_list(args.lams)
    value = generalized_lr(lams, nu)
    _emit(args, str(value), {"command": "lr", "value": value})
    return 0


def _cmd_qlr(args) -> int:
    nu = parse_partition(args.nu)
    lams = parse_partition_list(args.lams)
    value = quantum_lr_coefficient(lams, args.d, nu, args.k, args.m)
    _emit(args, str(value), {"command": "qlr", "value": value})
    return 0


def _cmd_rank(args) -> int:
    lams = parse_partition_list(args.lams)
    level = args.level if args.level is not None else args.l
    value = cb_rank(lams, args.r, level)
    _emit(args, str(value), {"command": "rank", "value": value})
    return 0


def _cmd_cbdeg(args) -> int:
    lams = parse_partition_list(args.lams)
    value = cb_c1_degree_m04(lams, args.r, args.l)
    _emit(args, str(value), {"command": "cbdeg", "value": value})
    return 0


def _cmd_gwdeg(args) -> int:
    lams = parse_partition_list(args.lams)
    value = gw_divisor_degree_m04(lams, Box(args.r, args.l))
    _emit(args, str(value), {"command": "gwdeg", "value": value})
    return 0


def _cmd_fcurve(args) -> int:
    lams = parse_partition_list(args.lams)
    fc = parse_fcurve(args.blocks, n=len(lams))
    gw = gw_dot_fcurve(lams, Box(args.r, args.l), fc)
    cb = cb_dot_fcurve(lams, args.r, args.l, fc)
    _emit(args, f"gw {gw}\ncb {cb}",
          {"command": "fcurve", "gw": gw, "cb": cb})
    return 0 if gw == cb else 1


def _cmd_sweep(args) -> int:
    path = args.cache if args.cache is not None else _cache.default_path()
    if path:
        _cache.activate(_cache.PersistentCache(path))
    try:
        report = sweep_conjecture(
            Box(args.r, args.l), n=args.n, up_to_symmetry=not args.full,
            jobs=args.jobs, collect_rows=args.report_dir is not None or args.json)
    finally:
        _cache.activate(None)
    if args.report_dir is not None:
        from .report import write_sweep_artifacts

        csv_path, fig_path = write_sweep_artifacts(report, args.report_dir)
        if not args.json:
            print(f"wrote {csv_path}")
            print(f"wrote {fig_path}")
    human = (f"checked {report.tuples_checked} tuples in {report.elapsed_ms} ms: "
             f"{len(report.mismatches)} mismatches")
    for miss in report.mismatches:
        human += "\n  " + json.dumps(miss.to_json_obj(), sort_keys=True)
    _emit(args, human, report.to_json_obj())
    return 0 if report.verified else 1


def _cmd_certify(args) -> int:
    lams = parse_partition_list(args.lams)
    result = nonvanishing_certificate(lams, Box(args.r, args.l),
                                      search_budget=args.budget)
    obj = {"command": "certify", "status": result.status.value,
           "examined": result.examined}
    if result.certificate is not None:
        obj["certificate"] = result.certificate.to_json_obj()
        human = (f"certificate: blocks {obj['certificate']['blocks']} "
                 f"mus {obj['certificate']['mus']} "
                 f"({result.examined} pairs examined)")
    else:
        human = f"{result.status.value} after {result.examined} pairs"
    _emit(args, human, obj)
    return 0 if result.status is SearchStatus.FOUND else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubertcb",
        description="Exact divisor degrees from Grassmannian Gromov-Witten "
                    "theory and conformal blocks, with equality sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(fn=fn)
        return p

    p = add("lr", _cmd_lr, "generalized Littlewood-Richardson coefficient")
    p.add_argument("--nu", required=True)
    p.add_argument("--lams", required=True)

    p = add("qlr", _cmd_qlr, "quantum Littlewood-Richardson coefficient")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lams", required=True)

    p = add("rank", _cmd_rank, "rank of a conformal-blocks bundle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--lams", required=True)

    p = add("cbdeg", _cmd_cbdeg, "4-point first Chern degree")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lams", required=True)

    p = add("gwdeg", _cmd_gwdeg, "4-point Gromov-Witten divisor degree")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lams", required=True)

    p = add("fcurve", _cmd_fcurve, "pair both divisors with one F-curve")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lams", required=True)
    p.add_argument("--blocks", required=True)

    p = add("sweep", _cmd_sweep, "compare GW and CB degrees over all critical tuples")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, default=4, choices=(4, 5))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", default=None,
                   help="JSON-lines coefficient cache (default: $SCHUBERT_CACHE)")
    p.add_argument("--full", action="store_true",
                   help="enumerate ordered tuples instead of multisets")
    p.add_argument("--report-dir", default=None,
                   help="write a CSV table and a PNG figure of the sweep")

    p = add("certify", _cmd_certify, "search a nonvanishing certificate")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lams", required=True)
    p.add_argument("--budget", type=int, default=None)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
