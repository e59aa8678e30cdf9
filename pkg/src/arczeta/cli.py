"""Command-line interface.

Subcommands: normalize, classify, fiber, zeta, recover, table, selfcheck.
Exit status is 0 on success, 1 when `classify` decides "not equivalent"
(or any selfcheck suite fails), and 2 on usage or input errors.

Polynomials are written like ``"x1^4 - x2^6 + x3^3"``; put ``--`` before
an argument that starts with a minus sign.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .brieskorn import BrieskornPoly, classify_pair, parse
from .fibers import FiberQuery, TwoPowerForm, beta_closed, beta_recursive, euler_fiber, reduce
from .recovery import SignRecovery, recover
from .selfcheck import run_all
from .tables import iter_table
from .zeta import (
    RealizedZeta,
    default_order,
    modified_zeta,
    plain_from_modified,
    zeta_to_json,
)

FORMATS = ("plain", "json", "csv")


@dataclass(frozen=True)
class Config:
    """Resolved run options shared by the table-like commands."""

    order: int | None = None  # None: twice the largest exponent in play
    fmt: str = "plain"
    jobs: int = 1
    max_d: int = 3
    max_exp: int = 8

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise ValueError("--order must be >= 1")
        if self.fmt not in FORMATS:
            raise ValueError(f"--format must be one of {FORMATS}")
        if self.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        if self.max_d < 1 or self.max_exp < 2:
            raise ValueError("--max-d must be >= 1 and --max-exp >= 2")


def _default_jobs() -> int:
    return os.cpu_count() or 1


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------


def cmd_normalize(args) -> int:
    poly = parse(args.polynomial).normalized()
    print(poly.to_text())
    return 0


def cmd_classify(args) -> int:
    f = parse(args.first)
    g = parse(args.second)
    verdict = classify_pair(f, g)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "equivalent": verdict.equivalent,
                    "reason": verdict.cause.value,
                    "detail": verdict.detail,
                }
            )
        )
    else:
        print(verdict.describe())
    return 0 if verdict.equivalent else 1


def cmd_fiber(args) -> int:
    poly = parse(args.polynomial)
    query = FiberQuery(poly.terms, args.target)
    closed = beta_closed(query)
    recursive = beta_recursive(query)
    if closed != recursive:
        raise AssertionError(
            f"engine disagreement: closed {closed} vs recursive {recursive}"
        )
    chi = closed.evaluate(-1)
    if isinstance(reduce(query), TwoPowerForm) and euler_fiber(query) != chi:
        raise AssertionError("Euler closed form disagrees with beta at u = -1")
    if args.format == "json":
        print(
            json.dumps(
                {
                    "polynomial": poly.to_text(),
                    "target": args.target,
                    "beta": closed.to_json(),
                    "beta_text": str(closed),
                    "chi_c": chi,
                }
            )
        )
    else:
        print(f"beta({{f = {args.target}}}) = {closed}")
        print(f"chi_c = {chi}")
    return 0


def _zeta_rows(z: RealizedZeta):
    for n in range(1, z.order + 1):
        c = z.coefficient(n)
        yield n, c


def cmd_zeta(args) -> int:
    poly = parse(args.polynomial)
    order = args.order if args.order is not None else default_order(poly)
    z = modified_zeta(poly, order)
    if args.kind == "plain":
        z = plain_from_modified(z)
    if args.format == "json":
        print(json.dumps(zeta_to_json(z)))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "bbar", "fplus", "fminus"])
        for n, c in _zeta_rows(z):
            writer.writerow([n, str(c.bbar), str(c.fplus), str(c.fminus)])
    else:
        print(f"{args.kind} zeta of {poly.to_text()} to order {z.order}")
        width = max(len(str(c.bbar)) for _, c in _zeta_rows(z))
        for n, c in _zeta_rows(z):
            print(f"n={n:<3d} bbar={str(c.bbar):<{width}}  f+={c.fplus}  f-={c.fminus}")
    return 0


def _recovery_json(recovery: SignRecovery) -> list[dict]:
    return [record.to_json() for record in recovery.records]


def cmd_recover(args) -> int:
    poly = parse(args.polynomial).normalized()
    if not poly.is_singular:
        print("nonsingular polynomial: nothing to recover", file=sys.stderr)
        return 2
    order = args.order if args.order is not None else default_order(poly)
    z = modified_zeta(poly, order)
    recovery = recover(list(poly.exponents), z)
    if args.format == "json":
        print(json.dumps(_recovery_json(recovery)))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["k", "sigma_plus", "sigma_minus", "pi", "rho", "branch"])
        for r in recovery.records:
            writer.writerow(
                [r.k, r.sigma_plus, r.sigma_minus, str(r.pi), str(r.rho), r.branch]
            )
    else:
        if not recovery.records:
            print("no sign-sensitive exponents: nothing to recover")
        for r in recovery.records:
            print(
                f"k={r.k}: sigma+={r.sigma_plus} sigma-={r.sigma_minus}"
                f"  pi={r.pi}  rho={r.rho}  branch={r.branch}"
            )
    return 0


def cmd_table(args) -> int:
    config = Config(
        order=args.order,
        fmt=args.format,
        jobs=args.jobs,
        max_d=args.max_d,
        max_exp=args.max_exp,
    )
    records = iter_table(
        config.max_d,
        config.max_exp,
        order=config.order,
        jobs=config.jobs,
        progress=lambda line: print(line, file=sys.stderr),
    )
    if config.fmt == "json":
        for record in records:
            print(json.dumps(record.to_json()))
    elif config.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["polynomial", "representative", "relevant", "sign_counts"])
        for record in records:
            writer.writerow(
                [
                    record.polynomial,
                    record.representative,
                    " ".join(map(str, record.relevant)),
                    " ".join(f"{k}:{p}/{m}" for k, p, m in record.sign_counts),
                ]
            )
    else:
        for record in records:
            counts = ", ".join(f"{k}: ({p},{m})" for k, p, m in record.sign_counts)
            print(
                f"{record.polynomial}  ->  {record.representative}"
                f"  K={{{', '.join(map(str, record.relevant))}}}"
                + (f"  signs {counts}" if counts else "")
            )
    return 0


def cmd_selfcheck(args) -> int:
    results = run_all(max_d=args.max_d, max_exp=args.max_exp, order=args.order)
    for result in results:
        print(result.summary())
    failed = [r for r in results if not r.ok]
    total = sum(r.checked for r in results)
    print(f"{len(results) - len(failed)}/{len(results)} suites passed, {total} checks")
    return 1 if failed else 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arczeta",
        description=(
            "Arc-analytic classification of Brieskorn polynomials via "
            "realized motivic zeta functions"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the canonical presentation")
    p.add_argument("polynomial")
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser("classify", help="decide arc-analytic equivalence")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("fiber", help="virtual Poincare polynomial of {f = c}")
    p.add_argument("polynomial")
    p.add_argument("target", type=int, choices=(-1, 0, 1))
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(handler=cmd_fiber)

    p = sub.add_parser("zeta", help="realized zeta coefficient table")
    p.add_argument("polynomial")
    p.add_argument("--kind", choices=("modified", "plain"), default="modified")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(handler=cmd_zeta)

    p = sub.add_parser("recover", help="recover sign counts from the zeta function")
    p.add_argument("polynomial")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(handler=cmd_recover)

    p = sub.add_parser("table", help="stream the classification table")
    p.add_argument("--max-d", type=int, default=2)
    p.add_argument("--max-exp", type=int, default=6)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("selfcheck", help="run every cross-validation sweep")
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-exp", type=int, default=8)
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=cmd_selfcheck)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, AssertionError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
