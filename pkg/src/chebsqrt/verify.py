"""Executable checks for every identity, sign pattern and error bound.

Each check returns a CheckResult; a result is a pass only when every sample
satisfied its bound or identity.  Exact statements (head coefficients, value
at 1, tail signs, composition identities) are checked in exact arithmetic
with zero tolerance; float statements carry tolerances expressed relative to
the working precision (slack 2**-(prec - 16)) so the suite stays meaningful
when the precision is raised.

Checks are pure; the suite runner executes them in a fixed order and the
JSON-lines output is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
from mpmath import mpc, mpf, workprec

from .chebyshev import DEFAULT_PREC, GUARD_BITS
from .closedform import (
    coeff_closed_range,
    decompose,
    radius_of_convergence,
    tail_sum_identity,
)
from .errors import BadIndex, BadRootOrder, CapExceeded, OnBranchCut
from .exact import (
    Polynomial,
    RationalFunction,
    eval_ratfun_complex,
    root_series_coeffs,
    sqrt_series_coeff,
    taylor_coefficients,
)
from .iterates import Scheme, iterate, v_iterate

SLACK_BITS = 16

# Monic-denominator coefficients of high iterates reach ~2**70, so polynomial
# evaluation needs far more guard than scalar arithmetic does.
EVAL_GUARD_BITS = 128


def _slack(prec: int):
    return mpf(2) ** (SLACK_BITS - prec)


def _nstr(x, digits: int = 17) -> str:
    return mpmath.nstr(x, digits)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check over its sample set."""

    name: str
    params: dict
    passed: bool
    samples: int
    worst_case: Optional[dict] = None
    skipped: bool = False
    note: str = ""

    @property
    def status(self) -> str:
        return "skip" if self.skipped else ("pass" if self.passed else "fail")

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "status": self.status,
            "samples": self.samples,
            "worst_case": self.worst_case,
            "note": self.note,
        }


@dataclass(frozen=True)
class DiskGrid:
    """Polar sample grid on the closed disk of the given radius.

    radial_steps rings at radii radius*i/radial_steps (i = 1..radial_steps)
    with angular_steps equispaced angles each; the boundary ring and the
    angle-0 point (z = radius) are included.  With exclude_near_one=True,
    points within 2**-(prec/2) of z = 1 are dropped, for quantities that
    divide by sqrt(1 - z).
    """

    radius: float = 1.0
    radial_steps: int = 16
    angular_steps: int = 32
    prec: int = DEFAULT_PREC
    exclude_near_one: bool = False

    def __post_init__(self):
        if not (0 < self.radius <= 1):
            raise BadIndex("grid radius must be in (0, 1]")
        if self.radial_steps < 1 or self.angular_steps < 1:
            raise BadIndex("grid steps must be positive")

    def points(self) -> list:
        with workprec(self.prec + GUARD_BITS):
            cutoff = mpf(2) ** -(self.prec // 2)
            radius = mpmath.mpmathify(self.radius)
            pts = []
            for i in range(1, self.radial_steps + 1):
                r = radius * i / self.radial_steps
                for j in range(self.angular_steps):
                    z = r * mpmath.expjpi(mpf(2 * j) / self.angular_steps)
                    if self.exclude_near_one and abs(z - 1) < cutoff:
                        continue
                    pts.append(z)
        return pts


def sqrt_principal(z, prec: int = DEFAULT_PREC):
    """Principal square root of 1 - z on the cut plane (cut along [1, +inf)).

    Returns w with w**2 = 1 - z and Re w >= 0; w = 0 exactly at z = 1, and
    Re w > 0 everywhere else off the cut.  Real z > 1 raises OnBranchCut.
    """
    with workprec(prec + GUARD_BITS):
        z = mpc(z)
        if z.imag == 0 and z.real > 1:
            raise OnBranchCut(f"z = {_nstr(z.real)} lies on the cut [1, +inf)")
        w = mpmath.sqrt(1 - z)
    with workprec(prec):
        return +w


def _mpf_coeffs(p: Polynomial) -> list:
    # convert under the caller's working precision
    return [mpmath.mpmathify(c) for c in p.coeffs]


def _horner(coeffs: list, z):
    acc = z * 0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


class _FloatEvaluator:
    """Rational function evaluator with pre-converted float coefficients."""

    def __init__(self, f: RationalFunction, workbits: int):
        self.workbits = workbits
        with workprec(workbits):
            self.num = _mpf_coeffs(f.num)
            self.den = _mpf_coeffs(f.den)

    def __call__(self, z):
        return _horner(self.num, z) / _horner(self.den, z)


def _iterate_for(scheme: Scheme, k: int) -> RationalFunction:
    if scheme.kind == "v":
        return v_iterate(k)
    return iterate(scheme, k)


# --------------------------------------------------------------------------
# exact checks


def check_head(n: int) -> CheckResult:
    """Coefficients 0..n of the n-th linear-fraction iterate equal the
    sqrt-series coefficients exactly."""
    if n < 1:
        raise BadIndex("head check needs n >= 1")
    cs = taylor_coefficients(v_iterate(n), n)
    bad = next((m for m in range(n + 1) if cs[m] != sqrt_series_coeff(m)), None)
    return CheckResult(
        name="head",
        params={"n": n},
        passed=bad is None,
        samples=n + 1,
        worst_case=None if bad is None else {"m": bad, "value": str(cs[bad])},
    )


def check_tail_signs(n: int, M: int) -> CheckResult:
    """Exact coefficients n+1..M are strictly negative.

    Polynomial iterates (n <= 1) have an identically-zero tail; those report
    SKIP with a note instead of a hollow pass.
    """
    if n < 1 or M <= n:
        raise BadIndex("tail check needs n >= 1 and M > n")
    f = v_iterate(n)
    if f.is_polynomial:
        return CheckResult(
            name="tail-signs",
            params={"n": n, "M": M},
            passed=True,
            samples=0,
            skipped=True,
            note="polynomial iterate: tail coefficients are identically zero",
        )
    cs = taylor_coefficients(f, M)
    bad = next((m for m in range(n + 1, M + 1) if cs[m] >= 0), None)
    return CheckResult(
        name="tail-signs",
        params={"n": n, "M": M},
        passed=bad is None,
        samples=M - n,
        worst_case=None if bad is None else {"m": bad, "value": str(cs[bad])},
    )


def check_value_at_one(n_max: int) -> CheckResult:
    """Exact evaluation at 1 gives 1/(n+1) for n = 0..n_max."""
    if n_max < 0:
        raise BadIndex("need n_max >= 0")
    bad = None
    for n in range(n_max + 1):
        if v_iterate(n)(1) != Fraction(1, n + 1):
            bad = n
            break
    return CheckResult(
        name="value-at-one",
        params={"n_max": n_max},
        passed=bad is None,
        samples=n_max + 1,
        worst_case=None if bad is None else {"n": bad},
    )


def check_composition(newton_k_max: int = 4, halley_k_max: int = 3) -> CheckResult:
    """Structural equality of Newton/Halley iterates with v-iterates.

    The k-th Newton iterate must equal the (2^k - 1)-th linear-fraction
    iterate as a canonical-form object, and the k-th Halley iterate the
    (3^k - 1)-th.  Zero tolerance: this is data equality.
    """
    failures = []
    for k in range(1, newton_k_max + 1):
        if iterate(Scheme.newton(2), k) != v_iterate(2**k - 1):
            failures.append(("newton", k))
    for k in range(1, halley_k_max + 1):
        if iterate(Scheme.halley(2), k) != v_iterate(3**k - 1):
            failures.append(("halley", k))
    return CheckResult(
        name="composition",
        params={"newton_k_max": newton_k_max, "halley_k_max": halley_k_max},
        passed=not failures,
        samples=newton_k_max + halley_k_max,
        worst_case=None if not failures else {"first_failure": str(failures[0])},
    )


def check_mu_bound(n_max: int = 10_000, prec: int = DEFAULT_PREC) -> CheckResult:
    """Numeric inequality C(2n,n)/4**n <= 1/sqrt(pi n) for n = 1..n_max.

    Checked as pi * n * mu_n**2 < 1 with mu tracked by the float recurrence
    mu_n = mu_{n-1} * (2n-1)/(2n); the accumulated rounding (~n ulps) is
    hundreds of bits below the true margin of ~1/(4n).
    """
    worst = None
    worst_val = mpf(0)
    with workprec(prec + GUARD_BITS):
        pi = +mpmath.pi
        mu = mpf(1)
        for n in range(1, n_max + 1):
            mu = mu * (2 * n - 1) / (2 * n)
            val = pi * n * mu * mu
            if val > worst_val:
                worst_val, worst = val, n
        passed = worst_val < 1
    return CheckResult(
        name="mu-bound",
        params={"n_max": n_max},
        passed=bool(passed),
        samples=n_max,
        worst_case={"n": worst, "pi_n_mu_sq": _nstr(worst_val)},
    )


# --------------------------------------------------------------------------
# float checks


def check_ratio_identity(
    n: int, samples: Optional[Sequence[Fraction]] = None, prec: int = DEFAULT_PREC
) -> CheckResult:
    """(f(x) - w)/(f(x) + w) equals ((1 - w)/(1 + w))**(n+1), w = sqrt(1-x).

    Sampled at rational x in (0, 1); the iterate value is exact, the square
    root is a float, and agreement is required within 2**-(prec - 16).
    """
    if samples is None:
        samples = (
            Fraction(1, 10),
            Fraction(1, 4),
            Fraction(1, 2),
            Fraction(3, 4),
            Fraction(9, 10),
        )
    f = v_iterate(n)
    tol = _slack(prec)
    worst = None
    worst_err = mpf(0)
    with workprec(prec + GUARD_BITS):
        for x in samples:
            if not 0 < x < 1:
                raise BadIndex(f"sample {x} outside (0, 1)")
            v = mpmath.mpmathify(f(x))
            w = mpmath.sqrt(1 - mpmath.mpmathify(x))
            lhs = (v - w) / (v + w)
            rhs = ((1 - w) / (1 + w)) ** (n + 1)
            err = abs(lhs - rhs)
            if worst is None or err > worst_err:
                worst_err, worst = err, x
    return CheckResult(
        name="ratio-identity",
        params={"n": n},
        passed=bool(worst_err <= tol),
        samples=len(samples),
        worst_case={"x": str(worst), "error": _nstr(worst_err), "tolerance": _nstr(tol)},
    )


def _disk_bound_factor(scheme: Scheme, k: int):
    # bound factor and |z|-power for the closed-unit-disk error bound
    if scheme.kind == "v":
        if k < 1:
            raise BadIndex("disk bound needs k >= 1")
        return 2 / mpmath.sqrt(mpmath.pi * k), k + 1
    if scheme.p != 2:
        raise BadRootOrder("closed-disk bounds are proved for p = 2 only")
    base = 2 if scheme.kind == "newton" else 3
    if k < 1:
        raise BadIndex("disk bound needs k >= 1")
    power = base**k
    return 2 / mpmath.sqrt(mpmath.pi) / mpmath.sqrt(power - 1), power


def check_disk_bound(scheme: Scheme, k: int, grid: DiskGrid) -> CheckResult:
    """|f(z) - sqrt(1-z)| <= factor * |z|**power on the closed unit disk.

    factor = 2/sqrt(pi k) with power k+1 for the linear-fraction scheme;
    2/sqrt(pi)/sqrt(2^k - 1) with power 2^k for Newton (p = 2), and the
    3^k analogue for Halley.  Slack 2**-(prec - 16) covers float rounding.
    """
    prec = grid.prec
    f = _iterate_for(scheme, k)
    work = prec + EVAL_GUARD_BITS
    ev = _FloatEvaluator(f, work)
    tol = _slack(prec)
    worst = None
    worst_excess = mpf("-inf")
    pts = grid.points()
    with workprec(work):
        factor, power = _disk_bound_factor(scheme, k)
        for z in pts:
            w = mpmath.sqrt(1 - z)
            err = abs(ev(z) - w)
            bound = factor * abs(z) ** power
            excess = err - bound
            if excess > worst_excess:
                worst_excess, worst = excess, z
    return CheckResult(
        name="disk-bound",
        params={"scheme": str(scheme), "k": k, "radius": grid.radius,
                "grid": f"{grid.radial_steps}x{grid.angular_steps}"},
        passed=bool(worst_excess <= tol),
        samples=len(pts),
        worst_case={"z": _nstr(worst), "excess": _nstr(worst_excess), "slack": _nstr(tol)},
    )


def check_uniform_compact(
    n_max: int,
    compact_radius: float = 0.9,
    prec: int = DEFAULT_PREC,
    radial_steps: int = 8,
    angular_steps: int = 16,
) -> CheckResult:
    """Sampled sup of |f_n - sqrt(1-z)| on a compact disk decays geometrically.

    With q = sampled sup of |(1 - w)/(1 + w)| < 1 and C = 2 sup|w|/(1 - q**2),
    the sup at step n must lie below C * q**(n+1) and be non-increasing in n
    (both up to slack).
    """
    if not 0 < compact_radius < 1:
        raise BadIndex("compact radius must be in (0, 1)")
    grid = DiskGrid(compact_radius, radial_steps, angular_steps, prec)
    pts = grid.points()
    tol = _slack(prec)
    work = prec + EVAL_GUARD_BITS
    sups = []
    with workprec(work):
        ws = [mpmath.sqrt(1 - z) for z in pts]
        q = max(abs((1 - w) / (1 + w)) for w in ws)
        big_c = 2 * max(abs(w) for w in ws) / (1 - q * q)
        for n in range(1, n_max + 1):
            ev = _FloatEvaluator(v_iterate(n), work)
            sups.append(max(abs(ev(z) - w) for z, w in zip(pts, ws)))
        geo_bad = next(
            (n for n, s in enumerate(sups, start=1) if s > big_c * q ** (n + 1) + tol),
            None,
        )
        mono_bad = next(
            (n for n in range(1, len(sups)) if sups[n] > sups[n - 1] + tol), None
        )
    passed = geo_bad is None and mono_bad is None
    return CheckResult(
        name="uniform-compact",
        params={"n_max": n_max, "radius": compact_radius},
        passed=bool(passed),
        samples=len(pts) * n_max,
        worst_case={
            "q": _nstr(q),
            "sup_first": _nstr(sups[0]),
            "sup_last": _nstr(sups[-1]),
            "geometric_violation_at": geo_bad,
            "monotonicity_violation_at": mono_bad,
        },
    )


def check_monotone_improvement(
    n_max: int, radius: float = 0.9, prec: int = DEFAULT_PREC
) -> CheckResult:
    """|f_{n+1}(z) - sqrt(1-z)| <= |f_n(z) - sqrt(1-z)| + slack pointwise.

    Asserted on disks of radius <= 0.9.  On the unit circle itself the
    improvement is only a heuristic, so |z| = 1 points are reported in the
    note as warnings rather than failures.
    """
    grid = DiskGrid(radius, 8, 16, prec)
    pts = grid.points()
    tol = _slack(prec)
    work = prec + EVAL_GUARD_BITS
    bad = None
    warnings = 0
    with workprec(work):
        ws = [mpmath.sqrt(1 - z) for z in pts]
        errs = None
        for n in range(1, n_max + 2):
            ev = _FloatEvaluator(v_iterate(n), work)
            new_errs = [abs(ev(z) - w) for z, w in zip(pts, ws)]
            if errs is not None:
                for z, before, after in zip(pts, errs, new_errs):
                    if after > before + tol:
                        if abs(z) >= 1:
                            warnings += 1
                        elif bad is None:
                            bad = {"n": n - 1, "z": _nstr(z), "increase": _nstr(after - before)}
            errs = new_errs
    return CheckResult(
        name="monotone-improvement",
        params={"n_max": n_max, "radius": radius},
        passed=bad is None,
        samples=len(pts) * n_max,
        worst_case=bad,
        note=f"{warnings} boundary warnings (|z| = 1 is not asserted)" if warnings else "",
    )


def check_sqrt_consistency(grid: DiskGrid) -> CheckResult:
    """sqrt_principal squares back to 1 - z and has nonnegative real part."""
    prec = grid.prec
    tol = mpf(2) ** (8 - prec)
    worst = None
    worst_err = mpf(0)
    sign_bad = None
    with workprec(prec + GUARD_BITS):
        for z in grid.points():
            w = sqrt_principal(z, prec)
            err = abs(w * w - (1 - z))
            if worst is None or err > worst_err:
                worst_err, worst = err, z
            if w.real < 0:
                sign_bad = z
    return CheckResult(
        name="sqrt-consistency",
        params={"radius": grid.radius, "grid": f"{grid.radial_steps}x{grid.angular_steps}"},
        passed=bool(worst_err <= tol and sign_bad is None),
        samples=grid.radial_steps * grid.angular_steps,
        worst_case={"z": _nstr(worst), "residual": _nstr(worst_err), "tolerance": _nstr(tol)},
    )


# --------------------------------------------------------------------------
# closed-form cross-checks

# Exact complex sample points (re, im as fractions with denominator 16),
# all inside |z| <= 0.9; paired with 8 real rational points below.
_COMPLEX_SAMPLES_16 = (
    (2, 2), (-2, 2), (-2, -2), (2, -2),
    (4, 6), (-4, 6), (-4, -6), (4, -6),
    (10, 4), (-10, 4), (-10, -4), (10, -4),
    (0, 11), (0, -11),
    (12, 6), (-12, 6), (-12, -6), (12, -6),
    (14, 2), (-14, 2), (-14, -2), (14, -2),
    (6, 12), (-6, 12),
)

_REAL_SAMPLES = (
    Fraction(-9, 10), Fraction(-3, 5), Fraction(-3, 10), Fraction(-1, 10),
    Fraction(1, 10), Fraction(3, 10), Fraction(3, 5), Fraction(9, 10),
)


def resummation_points():
    """The 32 rational sample points used by the resummation check."""
    pts = [(x, Fraction(0)) for x in _REAL_SAMPLES]
    pts.extend((Fraction(a, 16), Fraction(b, 16)) for a, b in _COMPLEX_SAMPLES_16)
    return pts


def check_resummation(n_max: int, prec: int = DEFAULT_PREC) -> CheckResult:
    """Partial-fraction evaluation equals the exact iterate on D(0, 0.9).

    The reference values are exact rational evaluations (real points through
    the rational-function call, complex points through exact complex Horner),
    compared within 2**-(prec - 16).
    """
    if n_max < 2:
        raise BadIndex("resummation check starts at n = 2")
    pts = resummation_points()
    tol = _slack(prec)
    worst = None
    worst_err = mpf(0)
    samples = 0
    for n in range(2, n_max + 1):
        f = v_iterate(n)
        pf = decompose(n, prec)
        with workprec(prec + GUARD_BITS):
            for re, im in pts:
                if im == 0:
                    exact = (f(re), Fraction(0))
                else:
                    exact = eval_ratfun_complex(f, re, im)
                z = mpc(mpmath.mpmathify(re), mpmath.mpmathify(im))
                got = pf.eval(z)
                ref = mpc(mpmath.mpmathify(exact[0]), mpmath.mpmathify(exact[1]))
                err = abs(got - ref)
                samples += 1
                if worst is None or err > worst_err:
                    worst_err, worst = err, (n, z)
    return CheckResult(
        name="resummation",
        params={"n": "2..%d" % n_max},
        passed=bool(worst_err <= tol),
        samples=samples,
        worst_case={
            "n": worst[0],
            "z": _nstr(worst[1]),
            "error": _nstr(worst_err),
            "tolerance": _nstr(tol),
        },
    )


def check_coeff_formula(n_max: int, prec: int = DEFAULT_PREC) -> CheckResult:
    """Closed-form coefficients match exact ones for m = 1..4n and are negative."""
    if n_max < 2:
        raise BadIndex("coefficient-formula check starts at n = 2")
    tol = _slack(prec)
    worst = None
    worst_err = mpf(0)
    sign_bad = None
    samples = 0
    for n in range(2, n_max + 1):
        M = 4 * n
        exact = taylor_coefficients(v_iterate(n), M)
        closed = coeff_closed_range(n, M, prec)
        with workprec(prec + GUARD_BITS):
            for m in range(1, M + 1):
                got = closed[m - 1]
                err = abs(got - mpmath.mpmathify(exact[m]))
                samples += 1
                if worst is None or err > worst_err:
                    worst_err, worst = err, (n, m)
                if got >= 0 and sign_bad is None:
                    sign_bad = (n, m)
    return CheckResult(
        name="coeff-formula",
        params={"n": "2..%d" % n_max},
        passed=bool(worst_err <= tol and sign_bad is None),
        samples=samples,
        worst_case={
            "n": worst[0],
            "m": worst[1],
            "error": _nstr(worst_err),
            "tolerance": _nstr(tol),
            "sign_violation": str(sign_bad) if sign_bad else None,
        },
    )


def _mpf_to_fraction(x) -> Fraction:
    num, den = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(int(num), int(den))


def check_radius_pole(n_max: int, prec: int = DEFAULT_PREC) -> CheckResult:
    """The computed series radius really is the nearest pole.

    The exact denominator of the n-th iterate, evaluated *exactly* at the
    dyadic approximation of sec^2(pi/(n+1)), must have magnitude below
    2**-(prec - 56); and no pole parameter of the decomposition may exceed
    cos^2(pi/(n+1)).
    """
    if n_max < 2:
        raise BadIndex("radius check starts at n = 2")
    tol = Fraction(1, 2 ** (prec - 56))
    worst = None
    worst_res = Fraction(0)
    pole_bad = None
    for n in range(2, n_max + 1):
        f = v_iterate(n)
        radius = radius_of_convergence(n, prec)
        residual = abs(f.den(_mpf_to_fraction(radius)))
        if worst is None or residual > worst_res:
            worst_res, worst = residual, n
        pf = decompose(n, prec)
        with workprec(prec + GUARD_BITS):
            ref = mpmath.cospi(mpf(1) / (n + 1)) ** 2
            if any(rho > ref + _slack(prec) for rho in pf.pole_params):
                pole_bad = n
    return CheckResult(
        name="radius-pole",
        params={"n": "2..%d" % n_max},
        passed=bool(worst_res < tol and pole_bad is None),
        samples=n_max - 1,
        worst_case={
            "n": worst,
            "den_at_radius": _nstr(mpmath.mpf(worst_res.numerator) / worst_res.denominator
                                   if worst_res else mpf(0)),
            "tolerance": _nstr(mpf(2) ** (56 - prec)),
            "pole_violation_at": pole_bad,
        },
    )


def check_tail_sum(n_max: int, prec: int = DEFAULT_PREC) -> CheckResult:
    """Partial tail sums increase monotonically to the closed-form value.

    Cutoff M = n + ceil((prec/2) / log2(radius)) makes the geometric tail
    beyond M smaller than 2**-(prec/2), so the final partial sum must land
    within 2**-(prec/4) of C(2n,n)/4**n - 1/(n+1).  Partial sums are exact
    rationals; every one of them must stay strictly at or below the limit.
    """
    if n_max < 1:
        raise BadIndex("tail-sum check starts at n = 1")
    close_tol = Fraction(1, 2 ** (prec // 4))
    worst = None
    worst_gap = Fraction(-1)
    bad = None
    samples = 0
    for n in range(1, n_max + 1):
        identity = tail_sum_identity(n)
        if n == 1:
            gap = identity  # empty tail: partial sum is exactly 0
            samples += 1
        else:
            radius = radius_of_convergence(n, prec)
            cutoff = n + int(math.ceil((prec / 2) / math.log2(float(radius))))
            cs = taylor_coefficients(v_iterate(n), cutoff)
            partial = Fraction(0)
            for m in range(n + 1, cutoff + 1):
                partial += -cs[m]
                samples += 1
                if partial > identity:
                    bad = {"n": n, "m": m, "overshoot": str(partial - identity)}
                    break
            gap = identity - partial
        if gap > worst_gap:
            worst_gap, worst = gap, n
    passed = bad is None and worst_gap <= close_tol
    return CheckResult(
        name="tail-sum",
        params={"n": "1..%d" % n_max},
        passed=bool(passed),
        samples=samples,
        worst_case=bad
        or {
            "n": worst,
            "gap": _nstr(mpf(worst_gap.numerator) / worst_gap.denominator if worst_gap else mpf(0)),
            "tolerance": _nstr(mpf(1) / close_tol.denominator),
        },
    )


# --------------------------------------------------------------------------
# sign-pattern exploration


@dataclass(frozen=True)
class GuoReport:
    """Exact sign-pattern findings for one Newton/Halley iterate prefix.

    head_agreement_length counts how many leading coefficients equal those
    of (1 - z)**(1/p).  first_sign_violation is the least m >= 1 whose
    coefficient is >= 0 within the scanned range; for a polynomial iterate
    the scan stops at its degree, because the zeros beyond it are structural
    rather than sign data (that situation is flagged by is_polynomial).
    """

    p: int
    scheme: str
    k: int
    M: int
    coeffs_checked: int
    head_agreement_length: int
    first_sign_violation: Optional[int]
    is_polynomial: bool
    sign_counts: dict = field(default_factory=dict)
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "scheme": self.scheme,
            "k": self.k,
            "M": self.M,
            "coeffs_checked": self.coeffs_checked,
            "head_agreement_length": self.head_agreement_length,
            "first_sign_violation": self.first_sign_violation,
            "is_polynomial": self.is_polynomial,
            "sign_counts": self.sign_counts,
            "note": self.note,
        }


def guo_explore(
    p: int,
    scheme_kind: str,
    k: int,
    M: int,
    max_k: Optional[int] = None,
    max_m: int = 4096,
) -> GuoReport:
    """Exact series prefix of the k-th iterate and its sign pattern.

    For p = 2 every coefficient from index 1 on should be strictly negative
    (that is a theorem); for p >= 3 the analogous statement is an open
    conjecture, so this function only reports what it finds and asserts
    nothing.
    """
    if scheme_kind not in ("newton", "halley"):
        raise BadIndex(f"scheme must be newton or halley, got {scheme_kind!r}")
    if not isinstance(p, int) or p < 2:
        raise BadRootOrder(f"root order must be an integer >= 2, got {p}")
    if k < 1 or M < 1:
        raise BadIndex("need k >= 1 and M >= 1")
    if M > max_m:
        raise CapExceeded(f"M = {M} exceeds the coefficient cap {max_m}")
    scheme = Scheme(scheme_kind, p)
    f = iterate(scheme, k, max_k)
    cs = taylor_coefficients(f, M)
    ref = root_series_coeffs(p, M)
    head = 0
    while head <= M and cs[head] == ref[head]:
        head += 1
    is_poly = f.is_polynomial
    scan_hi = min(M, f.num.degree) if is_poly else M
    violation = next((m for m in range(1, scan_hi + 1) if cs[m] >= 0), None)
    neg = sum(1 for m in range(1, scan_hi + 1) if cs[m] < 0)
    zero = sum(1 for m in range(1, scan_hi + 1) if cs[m] == 0)
    pos = scan_hi - neg - zero
    note = ""
    if is_poly:
        note = (
            f"polynomial iterate of degree {f.num.degree}: zero coefficients "
            "beyond the degree are structural and excluded from the sign scan"
        )
    return GuoReport(
        p=p,
        scheme=scheme_kind,
        k=k,
        M=M,
        coeffs_checked=scan_hi,
        head_agreement_length=head,
        first_sign_violation=violation,
        is_polynomial=is_poly,
        sign_counts={"negative": neg, "zero": zero, "positive": pos},
        note=note,
    )


def check_guo_p2(
    newton_ks=(2, 3, 4), halley_ks=(1, 2, 3), M: int = 256
) -> CheckResult:
    """No sign violation may appear at p = 2 (the proved case)."""
    bad = None
    samples = 0
    for kind, ks in (("newton", newton_ks), ("halley", halley_ks)):
        for k in ks:
            report = guo_explore(2, kind, k, M)
            samples += report.coeffs_checked
            if report.first_sign_violation is not None and bad is None:
                bad = {"scheme": kind, "k": k, "m": report.first_sign_violation}
    return CheckResult(
        name="guo-p2",
        params={"newton_k": list(newton_ks), "halley_k": list(halley_ks), "M": M},
        passed=bad is None,
        samples=samples,
        worst_case=bad,
    )


def check_head_lengths(
    newton_k_max: int = 4, halley_k_max: int = 3, M: int = 300
) -> CheckResult:
    """Head agreement reaches 2^k (Newton) and 3^k (Halley) at p = 2."""
    bad = None
    samples = 0
    for kind, k_max, base in (("newton", newton_k_max, 2), ("halley", halley_k_max, 3)):
        for k in range(1, k_max + 1):
            report = guo_explore(2, kind, k, M)
            samples += 1
            required = min(M + 1, base**k)
            if report.head_agreement_length < required and bad is None:
                bad = {
                    "scheme": kind,
                    "k": k,
                    "head": report.head_agreement_length,
                    "required": required,
                }
    return CheckResult(
        name="head-lengths",
        params={"newton_k_max": newton_k_max, "halley_k_max": halley_k_max, "M": M},
        passed=bad is None,
        samples=samples,
        worst_case=bad,
    )


# --------------------------------------------------------------------------
# suite runner


def default_suite(n_max: int = 16, prec: int = DEFAULT_PREC) -> list[CheckResult]:
    """The full default check battery, in deterministic order."""
    results: list[CheckResult] = []
    results.append(check_sqrt_consistency(DiskGrid(1.0, 8, 16, prec)))
    for n in range(1, n_max + 1):
        results.append(check_head(n))
    for n in range(1, n_max + 1):
        results.append(check_tail_signs(n, max(4 * n_max, n + 16)))
    for n in range(1, min(n_max, 32) + 1):
        results.append(check_ratio_identity(n, prec=prec))
    results.append(check_value_at_one(max(n_max, 100)))
    results.append(check_composition())
    small_grid = DiskGrid(1.0, 8, 16, prec)
    for n in range(2, min(n_max, 32) + 1):
        results.append(check_disk_bound(Scheme.v(), n, small_grid))
    for k in (2, 3, 4):
        results.append(check_disk_bound(Scheme.newton(2), k, small_grid))
    for k in (1, 2, 3):
        results.append(check_disk_bound(Scheme.halley(2), k, small_grid))
    results.append(check_uniform_compact(n_max, 0.9, prec))
    results.append(check_monotone_improvement(min(n_max, 16), 0.9, prec))
    results.append(check_resummation(max(n_max, 2), prec))
    results.append(check_coeff_formula(max(n_max, 2), prec))
    results.append(check_radius_pole(max(n_max, 2), prec))
    results.append(check_tail_sum(n_max, prec))
    results.append(check_guo_p2())
    results.append(check_head_lengths())
    results.append(check_mu_bound(10_000, prec))
    return results
