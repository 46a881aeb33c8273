"""Command-line front end.

Subcommands: `params` (tables, search, estimate, hw2), `selftest` and
`bench`.  Field specs use the grammar phi(M,2^L*C), e.g. phi(5,2^59*3).
Exit codes: 0 success, 1 test failure, 2 usage error.  The GRP_SEED
environment variable overrides any --seed flag.
"""

from __future__ import annotations

import argparse
import os
import random
import re
import sys

from . import arith
from .bench import run_bench
from .errors import GrpError, ParameterError
from .oracle import oracle_modmul
from .params import (GrpParams, canonical_value, params_new, psi,
                     to_canonical)
from .tables import (estimate_density, hw2_search, search_grps,
                     stability_rows_to_csv, stability_rows_to_json,
                     stability_table)

_SPEC_RE = re.compile(r"^phi\((\d+),2\^(\d+)(?:\*(\d+))?\)$")


def parse_spec(text: str) -> tuple[int, int, int]:
    """Parse phi(M,2^L*C) into (m_plus_1, l, c); C defaults to 1."""
    match = _SPEC_RE.match(text)
    if match is None:
        raise ParameterError(
            f"bad field spec {text!r}; expected phi(M,2^L*C)")
    m_plus_1, l, c = match.groups()
    return int(m_plus_1), int(l), int(c) if c else 1


def _seed(args: argparse.Namespace) -> int:
    env = os.environ.get("GRP_SEED")
    if env is not None:
        return int(env)
    return getattr(args, "seed", 0)


def _params_from_spec(text: str, w: int, q: int,
                      require_prime: bool = False) -> GrpParams:
    m_plus_1, l, c = parse_spec(text)
    return params_new(m_plus_1, l, c, w, q, require_prime=require_prime)


def _cmd_tables(args: argparse.Namespace) -> int:
    rows = stability_table(args.w, args.q, args.max_degree)
    if args.json:
        print(stability_rows_to_json(rows))
    else:
        print(stability_rows_to_csv(rows), end="")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    found = search_grps(args.m, args.l, args.c_min, args.c_max,
                        max_results=args.limit, rng_seed=_seed(args),
                        w=args.w, q=args.q)
    for params in found:
        print(f"{params.label()} bits={params.bits}")
    return 0


def _cmd_estimate(args: argparse.Namespace) -> int:
    est = estimate_density(args.bits, args.w, args.q,
                           sample_primes=args.sample_primes,
                           rng_seed=_seed(args))
    print(f"bits={est.bits} m_plus_1={est.m_plus_1} k_max={est.k_max} "
          f"log_t_max={est.log_t_max:.4g} l_min={est.l_min} "
          f"interval={est.interval_size} p_prime={est.p_prime:.3g} "
          f"est_count={est.est_count:.3g}")
    return 0


def _cmd_hw2(args: argparse.Namespace) -> int:
    for params in hw2_search(args.bits, args.w, args.q,
                             rng_seed=_seed(args)):
        print(f"{params.label()} bits={params.bits} "
              f"slack_bits={params.slack_bits}")
    return 0


def _selftest_field(params: GrpParams, rng: random.Random,
                    samples: int) -> bool:
    """Random oracle-equivalence sweep on one field."""
    p = params.p
    for _ in range(samples):
        a = rng.randrange(p)
        b = rng.randrange(p)
        xm = arith.to_montgomery(psi(params, a))
        ym = arith.to_montgomery(psi(params, b))
        prod = arith.from_montgomery(arith.modmul(xm, ym))
        want = oracle_modmul(to_canonical(psi(params, a)),
                             to_canonical(psi(params, b))).value
        if canonical_value(prod) != want:
            return False
        s = arith.add(psi(params, a), psi(params, b))
        if canonical_value(s) != (a + b) % p:
            return False
    return True


def _cmd_selftest(args: argparse.Namespace) -> int:
    rng = random.Random(_seed(args))
    failures = 0

    toy = params_new(3, 2, 3, 64, 2)
    if args.exhaustive_toy:
        ok = True
        for a in range(toy.p):
            xm = arith.to_montgomery(psi(toy, a))
            for b in range(a, toy.p):
                ym = arith.to_montgomery(psi(toy, b))
                prod = arith.from_montgomery(arith.modmul(xm, ym))
                if canonical_value(prod) != a * b % toy.p:
                    ok = False
        print(f"exhaustive toy sweep: {'ok' if ok else 'FAIL'}")
        failures += not ok
    else:
        ok = _selftest_field(toy, rng, 200)
        print(f"toy field sample: {'ok' if ok else 'FAIL'}")
        failures += not ok

    if args.param:
        params = _params_from_spec(args.param, args.w, args.q)
        ok = _selftest_field(params, rng, 100)
        print(f"{params.label()} sample: {'ok' if ok else 'FAIL'}")
        failures += not ok
    return 1 if failures else 0


def _cmd_bench(args: argparse.Namespace) -> int:
    params = _params_from_spec(args.param, args.w, args.q)
    report = run_bench(params, iters=args.iters, runs=args.runs,
                       seed=_seed(args))
    print(report.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grpfield",
        description="Repunit-prime field arithmetic, parameter search "
                    "and benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    params_p = sub.add_parser("params", help="parameter tables and searches")
    psub = params_p.add_subparsers(dest="params_command", required=True)

    tables_p = psub.add_parser("tables", help="stable-parameter table")
    tables_p.add_argument("--w", type=int, default=64)
    tables_p.add_argument("--q", type=int, default=2)
    tables_p.add_argument("--max-degree", type=int, default=17)
    fmt = tables_p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    tables_p.set_defaults(func=_cmd_tables)

    search_p = psub.add_parser("search", help="scan cofactors for primes")
    search_p.add_argument("--m", type=int, required=True,
                          help="field degree m+1 (odd prime)")
    search_p.add_argument("--l", type=int, required=True)
    search_p.add_argument("--c-min", type=int, required=True)
    search_p.add_argument("--c-max", type=int, required=True)
    search_p.add_argument("--limit", type=int, default=10)
    search_p.add_argument("--seed", type=int, default=0)
    search_p.add_argument("--w", type=int, default=64)
    search_p.add_argument("--q", type=int, default=2)
    search_p.set_defaults(func=_cmd_search)

    est_p = psub.add_parser("estimate", help="field-count estimate")
    est_p.add_argument("--bits", type=int, required=True)
    est_p.add_argument("--w", type=int, default=64)
    est_p.add_argument("--q", type=int, default=2)
    est_p.add_argument("--sample-primes", type=int, default=100)
    est_p.add_argument("--seed", type=int, default=0)
    est_p.set_defaults(func=_cmd_estimate)

    hw2_p = psub.add_parser("hw2", help="weight-2 cofactor search")
    hw2_p.add_argument("--bits", type=int, required=True)
    hw2_p.add_argument("--w", type=int, default=64)
    hw2_p.add_argument("--q", type=int, default=2)
    hw2_p.add_argument("--seed", type=int, default=0)
    hw2_p.set_defaults(func=_cmd_hw2)

    self_p = sub.add_parser("selftest", help="oracle-equivalence checks")
    self_p.add_argument("--param", help="field spec phi(M,2^L*C)")
    self_p.add_argument("--exhaustive-toy", action="store_true")
    self_p.add_argument("--seed", type=int, default=0)
    self_p.add_argument("--w", type=int, default=64)
    self_p.add_argument("--q", type=int, default=2)
    self_p.set_defaults(func=_cmd_selftest)

    bench_p = sub.add_parser("bench", help="time modmul vs baseline")
    bench_p.add_argument("--param", required=True,
                         help="field spec phi(M,2^L*C)")
    bench_p.add_argument("--iters", type=int, default=10_000)
    bench_p.add_argument("--runs", type=int, default=5)
    bench_p.add_argument("--seed", type=int, default=0)
    bench_p.add_argument("--w", type=int, default=64)
    bench_p.add_argument("--q", type=int, default=2)
    bench_p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GrpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
