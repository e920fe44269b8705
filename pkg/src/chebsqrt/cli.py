"""Command-line surface: coeffs, decompose, eval, verify, explore-guo, bench.

Exit codes: 0 = success / all checks pass, 1 = a mathematical check failed,
2 = usage or configuration error.  Output is deterministic for identical
invocations (timing fields excluded); random sampling in `bench` is seeded
and the seed is echoed.

Environment overrides: PREC_BITS (default working precision) and MAX_K
(Newton/Halley iteration cap).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpc, mpf, workprec

from .chebyshev import DEFAULT_PREC, GUARD_BITS
from .closedform import decompose, radius_of_convergence, tail_sum_identity
from .errors import ChebsqrtError
from .exact import (
    eval_ratfun_complex,
    root_series_coeffs,
    taylor_coefficients,
)
from .iterates import (
    DEFAULT_MAX_HALLEY_K,
    DEFAULT_MAX_NEWTON_K,
    DEFAULT_MAX_V_STEPS,
    Scheme,
    iterate,
    v_iterate,
)
from .verify import (
    CheckResult,
    DiskGrid,
    _FloatEvaluator,
    check_coeff_formula,
    check_composition,
    check_disk_bound,
    check_guo_p2,
    check_head,
    check_head_lengths,
    check_monotone_improvement,
    check_mu_bound,
    check_radius_pole,
    check_ratio_identity,
    check_resummation,
    check_sqrt_consistency,
    check_tail_signs,
    check_tail_sum,
    check_uniform_compact,
    check_value_at_one,
    default_suite,
    guo_explore,
)


@dataclass
class CliConfig:
    precision_bits: int = 256
    max_v_steps: int = DEFAULT_MAX_V_STEPS
    max_newton_k: int = DEFAULT_MAX_NEWTON_K
    max_halley_k: int = DEFAULT_MAX_HALLEY_K
    max_coeff_index: int = 4096
    output_format: str = "human"

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ChebsqrtError("precision must be at least 64 bits")
        if min(self.max_v_steps, self.max_newton_k, self.max_halley_k,
               self.max_coeff_index) < 1:
            raise ChebsqrtError("caps must be positive")


def _float_str(x, prec: int) -> str:
    if mpmath.isinf(x):
        return "inf"
    return mpmath.nstr(x, mpmath.libmp.prec_to_dps(prec) + 2)


def _scheme_from(name: str, p: int) -> Scheme:
    if name == "v":
        return Scheme.v()
    if name == "newton":
        return Scheme.newton(p)
    if name == "halley":
        return Scheme.halley(p)
    raise ChebsqrtError(f"unknown scheme {name!r}")


def _iterate_with_caps(scheme: Scheme, k: int, cfg: CliConfig):
    cap = {
        "v": cfg.max_v_steps,
        "newton": cfg.max_newton_k,
        "halley": cfg.max_halley_k,
    }[scheme.kind]
    if scheme.kind == "v":
        return v_iterate(k, max_n=cap)
    return iterate(scheme, k, max_k=cap)


# --------------------------------------------------------------------------
# coeffs


def cmd_coeffs(args, cfg: CliConfig) -> int:
    scheme = _scheme_from(args.scheme, args.p)
    if args.M > cfg.max_coeff_index:
        raise ChebsqrtError(f"M = {args.M} exceeds the coefficient cap {cfg.max_coeff_index}")
    f = _iterate_with_caps(scheme, args.k, cfg)
    cs = taylor_coefficients(f, args.M)
    p = 2 if scheme.kind == "v" else scheme.p
    ref = root_series_coeffs(p, args.M)
    if scheme.kind == "v":
        head_limit = args.k + 1
    else:
        head_limit = (2 if scheme.kind == "newton" else 3) ** args.k
    rows = []
    for m in range(args.M + 1):
        value = cs[m]
        sign = "+" if value > 0 else "-" if value < 0 else "0"
        region = "head" if m < head_limit else "tail"
        rows.append({"m": m, "coefficient": str(value), "reference": str(ref[m]),
                     "sign": sign, "region": region})
    if cfg.output_format == "json":
        print(json.dumps({"scheme": str(scheme), "k": args.k, "M": args.M, "rows": rows}))
    elif cfg.output_format == "csv":
        print("m,coefficient,reference,sign,region")
        for r in rows:
            print(f"{r['m']},{r['coefficient']},{r['reference']},{r['sign']},{r['region']}")
    else:
        print(f"series coefficients: scheme {scheme}, k = {args.k}")
        for r in rows:
            print(f"  m={r['m']:<4} {r['coefficient']:<24} ref {r['reference']:<24}"
                  f" {r['sign']} {r['region']}")
    return 0


# --------------------------------------------------------------------------
# decompose


def cmd_decompose(args, cfg: CliConfig) -> int:
    prec = cfg.precision_bits
    pf = decompose(args.n, prec)
    radius = radius_of_convergence(args.n, prec)
    tail = tail_sum_identity(args.n)
    if cfg.output_format == "json":
        doc = pf.to_json_dict()
        doc["radius_of_convergence"] = _float_str(radius, prec)
        doc["tail_sum_identity"] = str(tail)
        print(json.dumps(doc))
    elif cfg.output_format == "csv":
        print("n,k,weight,pole_param,scale,radius,tail_sum")
        scale = _float_str(pf.scale, prec)
        rad = _float_str(radius, prec)
        if pf.term_count == 0:
            print(f"{pf.n},,,,{scale},{rad},{tail}")
        for i, (w, rho) in enumerate(zip(pf.weights, pf.pole_params), start=1):
            print(f"{pf.n},{i},{_float_str(w, prec)},{_float_str(rho, prec)},"
                  f"{scale},{rad},{tail}")
    else:
        print(f"partial fractions of iterate n = {pf.n}: head 1 - z/2, "
              f"scale {_float_str(pf.scale, 53)}")
        for i, (w, rho) in enumerate(zip(pf.weights, pf.pole_params), start=1):
            print(f"  term {i}: weight {_float_str(w, 53)}  pole_param {_float_str(rho, 53)}")
        print(f"  radius of convergence: {_float_str(radius, 53)}")
        print(f"  tail-sum identity value: {tail}")
    return 0


# --------------------------------------------------------------------------
# eval


def cmd_eval(args, cfg: CliConfig) -> int:
    prec = cfg.precision_bits
    scheme = _scheme_from(args.scheme, args.p)
    f = _iterate_with_caps(scheme, args.k, cfg)
    if args.at is not None:
        x = Fraction(args.at)
        value = f(x)
        with workprec(prec):
            approx = mpmath.mpmathify(value)
        if cfg.output_format == "json":
            print(json.dumps({"scheme": str(scheme), "k": args.k, "at": str(x),
                              "exact": str(value), "decimal": _float_str(approx, prec)}))
        else:
            print(f"{scheme} iterate k={args.k} at {x}: {value} = {_float_str(approx, prec)}")
    else:
        with workprec(prec + GUARD_BITS):
            z = mpc(mpmath.mpmathify(args.at_re), mpmath.mpmathify(args.at_im))
            ev = _FloatEvaluator(f, prec + GUARD_BITS)
            val = ev(z)
        if cfg.output_format == "json":
            print(json.dumps({"scheme": str(scheme), "k": args.k,
                              "at_re": args.at_re, "at_im": args.at_im,
                              "re": _float_str(val.real, prec),
                              "im": _float_str(val.imag, prec)}))
        else:
            print(f"{scheme} iterate k={args.k} at {args.at_re}+{args.at_im}i: "
                  f"{_float_str(val.real, prec)} + {_float_str(val.imag, prec)}i")
    return 0


# --------------------------------------------------------------------------
# verify


def _single_check(args, cfg: CliConfig) -> list[CheckResult]:
    prec = cfg.precision_bits
    name = args.check
    grid = DiskGrid(args.grid_radius, args.grid_radial, args.grid_angular, prec)
    if name == "head":
        ns = [args.n] if args.n else list(range(1, args.n_max + 1))
        return [check_head(n) for n in ns]
    if name == "tail-signs":
        ns = [args.n] if args.n else list(range(1, args.n_max + 1))
        return [check_tail_signs(n, args.M or max(16, 4 * n)) for n in ns]
    if name == "ratio-identity":
        ns = [args.n] if args.n else list(range(1, args.n_max + 1))
        return [check_ratio_identity(n, prec=prec) for n in ns]
    if name == "value-at-one":
        return [check_value_at_one(args.n_max)]
    if name == "composition":
        return [check_composition()]
    if name == "disk-bound":
        scheme = _scheme_from(args.scheme or "v", args.p)
        ks = [args.k] if args.k else (
            list(range(2, args.n_max + 1)) if scheme.kind == "v" else [1, 2, 3]
        )
        return [check_disk_bound(scheme, k, grid) for k in ks]
    if name == "uniform-compact":
        return [check_uniform_compact(args.n_max, args.compact_radius, prec)]
    if name == "monotone-improvement":
        return [check_monotone_improvement(args.n_max, args.compact_radius, prec)]
    if name == "resummation":
        return [check_resummation(max(args.n_max, 2), prec)]
    if name == "coeff-formula":
        return [check_coeff_formula(max(args.n_max, 2), prec)]
    if name == "radius-pole":
        return [check_radius_pole(max(args.n_max, 2), prec)]
    if name == "tail-sum":
        return [check_tail_sum(args.n_max, prec)]
    if name == "guo-p2":
        return [check_guo_p2(M=args.M or 256)]
    if name == "head-lengths":
        return [check_head_lengths(M=args.M or 300)]
    if name == "sqrt-consistency":
        return [check_sqrt_consistency(grid)]
    if name == "mu-bound":
        return [check_mu_bound(args.n_max if args.n_max > 16 else 10_000, prec)]
    raise ChebsqrtError(f"unknown check {name!r}")


def cmd_verify(args, cfg: CliConfig) -> int:
    prec = cfg.precision_bits
    if args.all:
        results = default_suite(args.n_max, prec)
    elif args.check:
        results = _single_check(args, cfg)
    else:
        raise ChebsqrtError("choose --all or --check NAME")
    failed = 0
    for r in results:
        if cfg.output_format == "human":
            mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[r.status]
            extra = f"  ({r.note})" if r.note else ""
            print(f"{mark} {r.name} {r.params} samples={r.samples}{extra}")
        else:
            print(json.dumps(r.to_json_dict()))
        if r.status == "fail":
            failed += 1
    return 1 if failed else 0


# --------------------------------------------------------------------------
# explore-guo


def cmd_explore_guo(args, cfg: CliConfig) -> int:
    report = guo_explore(
        args.p,
        args.scheme,
        args.k,
        args.M,
        max_k=cfg.max_newton_k if args.scheme == "newton" else cfg.max_halley_k,
        max_m=cfg.max_coeff_index,
    )
    if cfg.output_format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"sign-pattern report: p={report.p} {report.scheme} k={report.k} M={report.M}")
        print(f"  head agreement length: {report.head_agreement_length}")
        print(f"  coefficients scanned:  {report.coeffs_checked}")
        print(f"  signs: {report.sign_counts}")
        print(f"  first sign violation:  {report.first_sign_violation}")
        if report.note:
            print(f"  note: {report.note}")
    if args.p == 2 and report.first_sign_violation is not None:
        return 1  # would contradict the proved p = 2 case
    return 0


# --------------------------------------------------------------------------
# bench


def _random_disk_rationals(rng: random.Random, count: int, denom: int = 64):
    """Seeded rational points with |z| <= 0.9 (rejection sampling)."""
    limit = (9 * denom // 10) ** 2
    pts = []
    while len(pts) < count:
        a = rng.randint(-denom, denom)
        b = rng.randint(-denom, denom)
        if a * a + b * b <= limit:
            pts.append((Fraction(a, denom), Fraction(b, denom)))
    return pts


def cmd_bench(args, cfg: CliConfig) -> int:
    if args.n < 2:
        raise ChebsqrtError("bench needs n >= 2 (no decomposition terms below that)")
    prec = cfg.precision_bits
    rng = random.Random(args.seed)
    pts = _random_disk_rationals(rng, args.points)
    f = v_iterate(args.n, max_n=cfg.max_v_steps)
    pf = decompose(args.n, prec)
    work = prec + GUARD_BITS

    t0 = time.perf_counter()
    exact_vals = None
    for _ in range(args.reps):
        exact_vals = [eval_ratfun_complex(f, re, im) for re, im in pts]
    t_exact = time.perf_counter() - t0

    with workprec(work):
        zs = [mpc(mpmath.mpmathify(re), mpmath.mpmathify(im)) for re, im in pts]
    ev = _FloatEvaluator(f, work)
    t0 = time.perf_counter()
    horner_vals = None
    for _ in range(args.reps):
        with workprec(work):
            horner_vals = [ev(z) for z in zs]
    t_horner = time.perf_counter() - t0

    t0 = time.perf_counter()
    pf_vals = None
    for _ in range(args.reps):
        pf_vals = [pf.eval(z) for z in zs]
    t_pf = time.perf_counter() - t0

    with workprec(work):
        refs = [mpc(mpmath.mpmathify(re), mpmath.mpmathify(im)) for re, im in exact_vals]
        dev_horner = max(abs(a - b) for a, b in zip(horner_vals, refs))
        dev_pf = max(abs(a - b) for a, b in zip(pf_vals, refs))
        tol = mpf(2) ** (16 - prec)
    rows = [
        ("exact-horner", t_exact, mpf(0)),
        ("bigfloat-horner", t_horner, dev_horner),
        ("partial-fraction", t_pf, dev_pf),
    ]
    if cfg.output_format == "json":
        print(json.dumps({
            "n": args.n, "points": args.points, "reps": args.reps, "seed": args.seed,
            "precision_bits": prec, "tolerance": _float_str(tol, 53),
            "rows": [{"strategy": s, "seconds": round(t, 6),
                      "max_deviation": _float_str(d, 53)} for s, t, d in rows],
        }))
    elif cfg.output_format == "csv":
        print("strategy,points,reps,seconds,max_deviation")
        for s, t, d in rows:
            print(f"{s},{args.points},{args.reps},{t:.6f},{_float_str(d, 53)}")
    else:
        print(f"bench: n={args.n} points={args.points} reps={args.reps} seed={args.seed}")
        for s, t, d in rows:
            print(f"  {s:<18} {t:10.4f} s   max deviation {_float_str(d, 53)}")
    return 1 if max(dev_horner, dev_pf) > tol else 0


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebsqrt",
        description="Exact rational approximants of sqrt(1 - z) and their checks",
    )
    parser.add_argument("--prec", type=int,
                        default=int(os.environ.get("PREC_BITS", str(DEFAULT_PREC))),
                        help="working precision in bits (env PREC_BITS)")
    parser.add_argument("--format", choices=("json", "csv", "human"), default="human")
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed for bench")
    parser.add_argument("--max-k", type=int,
                        default=int(os.environ.get("MAX_K", str(DEFAULT_MAX_NEWTON_K))),
                        help="Newton/Halley iteration cap (env MAX_K)")

    # global flags are accepted after the subcommand too; values given there win
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "csv", "human"),
                        default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-k", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", parents=[common],
                       help="exact series coefficients of an iterate")
    c.add_argument("--scheme", choices=("v", "newton", "halley"), required=True)
    c.add_argument("--p", type=int, default=2)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--M", type=int, required=True)
    c.set_defaults(func=cmd_coeffs)

    d = sub.add_parser("decompose", parents=[common], help="partial-fraction data of a v-iterate")
    d.add_argument("--n", type=int, required=True)
    d.set_defaults(func=cmd_decompose)

    e = sub.add_parser("eval", parents=[common], help="evaluate an iterate at a point")
    e.add_argument("--scheme", choices=("v", "newton", "halley"), required=True)
    e.add_argument("--p", type=int, default=2)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--at", help="rational point, e.g. 1/2 (exact evaluation)")
    e.add_argument("--at-re", help="real part of a complex point (decimal)")
    e.add_argument("--at-im", help="imaginary part of a complex point (decimal)")
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", parents=[common], help="run identity/bound checks, JSON lines out")
    v.add_argument("--all", action="store_true")
    v.add_argument("--check", help="run a single named check")
    v.add_argument("--n", type=int, default=0)
    v.add_argument("--n-max", type=int, default=16)
    v.add_argument("--M", type=int, default=0)
    v.add_argument("--k", type=int, default=0)
    v.add_argument("--scheme", choices=("v", "newton", "halley"))
    v.add_argument("--p", type=int, default=2)
    v.add_argument("--grid-radius", type=float, default=1.0)
    v.add_argument("--grid-radial", type=int, default=8)
    v.add_argument("--grid-angular", type=int, default=16)
    v.add_argument("--compact-radius", type=float, default=0.9)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("explore-guo", parents=[common], help="sign-pattern report for p-th root iterates")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--scheme", choices=("newton", "halley"), required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--M", type=int, required=True)
    g.set_defaults(func=cmd_explore_guo)

    b = sub.add_parser("bench", parents=[common], help="compare evaluation strategies")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--points", type=int, default=100)
    b.add_argument("--reps", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(
            precision_bits=args.prec,
            max_newton_k=args.max_k,
            max_halley_k=args.max_k,
            output_format=args.format,
        )
        if args.command == "eval" and args.at is None and (
            args.at_re is None or args.at_im is None
        ):
            raise ChebsqrtError("eval needs --at or both --at-re and --at-im")
        return args.func(args, cfg)
    except ChebsqrtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
