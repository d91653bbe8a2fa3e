"""Command-line front end.

Subcommands:

* ``core``  — bar-core and weight of a strict partition;
* ``sign``  — the signed product N and Galois sign mu of a label;
* ``verify`` — run the blockwise label/weight verification, optionally
  writing a deterministic JSON report;
* ``reps-check`` — run the local-representation relation and Galois-sign
  suite for one parameter tuple.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .bijection import VerificationReport, verify_all
from .local_reps import (
    PresentationParams,
    alpha_tuples,
    delta_alpha_plus,
    even_split_traces,
    sigma_equivalence,
    verify_all_relations,
)
from .partitions import BarPartition
from .signs import SpinContext, mu_lambda, mu_psi, n_lambda

SCHEMA = "spinblocks-report/1"


class UsageError(Exception):
    pass


def _parse_parts(text: str) -> BarPartition:
    try:
        parts = tuple(int(x) for x in text.split(",")) if text else ()
        return BarPartition(parts)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _parse_eta(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise UsageError(f"eta must be +1 or -1, got {text!r}")


def _check_odd_prime(p: int) -> None:
    try:
        SpinContext(p, 1)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _fmt_parts(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(x) for x in parts) + ")"


def _fmt_sign(s: int) -> str:
    return f"{s:+d}"


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_core(args: argparse.Namespace) -> int:
    _check_odd_prime(args.p)
    lam = _parse_parts(args.parts)
    from .partitions import p_bar_core

    core, w = p_bar_core(lam, args.p)
    print(f"core={_fmt_parts(core.parts)} w={w}")
    return 0


def cmd_sign(args: argparse.Namespace) -> int:
    _check_odd_prime(args.p)
    ctx = SpinContext(args.p, _parse_eta(args.eta))
    lam = _parse_parts(args.parts)
    n = n_lambda(lam, ctx)
    mu = mu_lambda(lam, ctx)
    print(f"N={_fmt_rational(n)} mu={_fmt_sign(mu)}")
    return 0


def _report_json(reports: list[VerificationReport], n: int, p: int, eta: int) -> dict:
    blocks = []
    for r in reports:
        block = {
            "kappa": list(r.kappa.parts),
            "ibr": {"self": r.ibr_self, "nonself": r.ibr_nonself},
            "weights": {
                "sym_plus": r.weights_sym_plus,
                "sym_minus": r.weights_sym_minus,
            },
            "mu_table": [
                {"lambda": list(lam.parts), "mu": mu} for lam, mu in r.mu_table
            ],
            "verdict": "PASS" if r.passed else "FAIL",
        }
        if r.failure:
            block["failure"] = r.failure
        if r.note:
            block["note"] = r.note
        blocks.append(block)
    return {
        "schema": SCHEMA,
        "params": {"n": n, "p": p, "eta": eta},
        "blocks": blocks,
        "verdict": "PASS" if all(r.passed for r in reports) else "FAIL",
    }


def cmd_verify(args: argparse.Namespace) -> int:
    _check_odd_prime(args.p)
    eta = _parse_eta(args.eta)
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    start = time.perf_counter()
    reports = verify_all(args.n, args.p, eta, jobs=args.jobs)
    if args.block is not None:
        kappa = _parse_parts(args.block)
        reports = [r for r in reports if r.kappa == kappa]
        if not reports:
            raise UsageError(f"no block with core {args.block} at n={args.n}")
    elapsed = time.perf_counter() - start
    for r in reports:
        verdict = "PASS" if r.passed else f"FAIL ({r.failure})"
        print(
            f"block kappa={_fmt_parts(r.kappa.parts)} "
            f"ibr={r.ibr_self}+{r.ibr_nonself} "
            f"weights={r.weights_sym_plus}+{r.weights_sym_minus} {verdict}"
        )
    print(f"checked {len(reports)} blocks in {elapsed:.2f}s")
    if args.json:
        doc = _report_json(reports, args.n, args.p, eta)
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_reps_check(args: argparse.Namespace) -> int:
    _check_odd_prime(args.p)
    eta = _parse_eta(args.eta)
    if args.e < 1 or args.e > 8 or args.c < 1 or args.r < 1 or args.r > 3:
        raise UsageError("size guard: need 1 <= e <= 8, c >= 1, 1 <= r <= 3")
    params = PresentationParams(p=args.p, eta=eta, c_norm=args.c, r=args.r, e=args.e)
    expected = mu_psi(params.ctx, params.c_norm, params.e)
    for alpha in alpha_tuples(params):
        images = delta_alpha_plus(params, alpha)
        ok, witness = verify_all_relations(images, params)
        if not ok:
            print(f"FAIL: {witness}")
            return 1
        if params.e % 2 == 0:
            even_split_traces(images, params)
        else:
            mu_prime, _ = sigma_equivalence(images, params)
            if mu_prime != expected:
                print("FAIL: Galois sign mismatch")
                return 1
    if params.e % 2:
        print(f"mu'={_fmt_sign(expected)}")
    else:
        print(f"mu''={_fmt_sign(expected)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinblocks",
        description="Exact verification of spin-block label/weight bijections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_core = sub.add_parser("core", help="bar-core and weight of a strict partition")
    p_core.add_argument("--parts", required=True, help="comma-separated descending parts")
    p_core.add_argument("--p", type=int, required=True)
    p_core.set_defaults(func=cmd_core)

    p_sign = sub.add_parser("sign", help="signed product N and Galois sign mu")
    p_sign.add_argument("--parts", required=True)
    p_sign.add_argument("--p", type=int, required=True)
    p_sign.add_argument("--eta", required=True)
    p_sign.set_defaults(func=cmd_sign)

    p_verify = sub.add_parser("verify", help="blockwise label/weight verification")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--eta", required=True)
    p_verify.add_argument("--block", help="restrict to the block of this bar-core")
    p_verify.add_argument("--json", help="write a deterministic JSON report here")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_reps = sub.add_parser("reps-check", help="local-representation relation suite")
    p_reps.add_argument("--p", type=int, required=True)
    p_reps.add_argument("--eta", required=True)
    p_reps.add_argument("--c", type=int, required=True, help="wreath-tower depth |c|")
    p_reps.add_argument("--e", type=int, required=True)
    p_reps.add_argument("--r", type=int, default=1)
    p_reps.set_defaults(func=cmd_reps_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
