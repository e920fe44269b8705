"""Exact arithmetic: dense rational-coefficient polynomials and rational functions.

Scalars are `fractions.Fraction` throughout, so nothing in this module ever
rounds.  Floating point lives in the closed-form and verification layers.

Wire format: a rational scalar serializes as ``"p/q"`` in base 10 (``"p"``
when the denominator is 1, which is what ``str(Fraction)`` produces); a
polynomial serializes as a JSON array of such strings, index = power of z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    BadIndex,
    BadRootOrder,
    NotAnalyticAtZero,
    PoleAtPoint,
    ZeroDenominator,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_fraction(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``z**i``.

    The zero polynomial stores no coefficients; otherwise the last stored
    coefficient is nonzero, so two equal polynomials are structurally equal.
    Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        """Coefficient of z**i (zero beyond the stored degree)."""
        if i < 0:
            raise BadIndex(f"coefficient index {i} is negative")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        """Exact long division over the rationals."""
        other = _coerce_poly(other)
        if other.is_zero:
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dv, lead = other.degree, other.coeffs[-1]
        if self.degree < dv:
            return ZERO, self
        quot = [Fraction(0)] * (self.degree - dv + 1)
        for k in range(len(quot) - 1, -1, -1):
            q = rem[k + dv] / lead
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return Polynomial(quot), Polynomial(rem[:dv])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; works for Fraction, mpf, mpc or complex x."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


def _coerce_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial((x,))
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial((1,))
Z = Polynomial((0, 1))


def _clear_denominators(p: Polynomial) -> list[int]:
    """Primitive integer coefficient list of a scalar multiple of p."""
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p.coeffs]
    content = 0
    for v in ints:
        content = math.gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _primitive(ints: list[int]) -> list[int]:
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def _pseudo_rem(u: list[int], v: list[int]) -> list[int]:
    dv = len(v) - 1
    lv = v[-1]
    r = list(u)
    while r and len(r) - 1 >= dv:
        lr = r[-1]
        k = len(r) - 1 - dv
        r = [lv * c for c in r]
        for i, vc in enumerate(v):
            r[k + i] -= lr * vc
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via the primitive polynomial remainder sequence.

    Working over integers with content removal keeps intermediate
    coefficients from swelling the way a naive rational Euclid does.
    """
    if a.is_zero and b.is_zero:
        return ZERO
    u = _clear_denominators(a) if not a.is_zero else []
    v = _clear_denominators(b) if not b.is_zero else []
    while v:
        u, v = v, _primitive(_pseudo_rem(u, v))
    lead = Fraction(u[-1])
    return Polynomial(Fraction(c) / lead for c in u)


class RationalFunction:
    """Quotient of two polynomials in canonical form.

    Canonical means gcd(num, den) = 1 and den monic, so structural equality
    of two instances is equality of the functions they represent.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("num and den must be Polynomial or rational scalars")
        if den.is_zero:
            raise ZeroDenominator("denominator is the zero polynomial")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.coeffs[-1]
            if lead != 1:
                inv = 1 / lead
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact value at a rational point; raises PoleAtPoint on a pole."""
        x = as_fraction(x)
        d = self.den(x)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at {x}")
        return self.num(x) / d

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDenominator("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _coerce_ratfun(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Polynomial)):
        return RationalFunction(x)
    return NotImplemented


ONE_RF = RationalFunction(ONE)


@dataclass(frozen=True)
class PowerSeriesPrefix:
    """Leading Taylor coefficients c_0..c_M of a function analytic at 0."""

    coeffs: tuple[Fraction, ...]
    source: str

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m]

    def __len__(self) -> int:
        return len(self.coeffs)


def taylor_coefficients(f: RationalFunction, M: int, source: str = "") -> PowerSeriesPrefix:
    """Exact Taylor coefficients c_0..c_M of f at the origin.

    Uses the linear recurrence c_m = (a_m - sum_{j>=1} b_j c_{m-j}) / b_0 on
    the numerator/denominator coefficients, so the cost is O(M * deg den).
    """
    if M < 0:
        raise BadIndex("series cutoff must be >= 0")
    b0 = f.den.coeff(0)
    if b0 == 0:
        raise NotAnalyticAtZero("denominator vanishes at 0")
    a, b = f.num.coeffs, f.den.coeffs
    cs: list[Fraction] = []
    for m in range(M + 1):
        acc = a[m] if m < len(a) else Fraction(0)
        for j in range(1, min(m, len(b) - 1) + 1):
            acc -= b[j] * cs[m - j]
        cs.append(acc / b0)
    return PowerSeriesPrefix(tuple(cs), source or f"taylor({f!r})")


def sqrt_series_coeff(m: int) -> Fraction:
    """Coefficient of z**m in the binomial series of sqrt(1 - z).

    Equals C(2m, m) / ((1 - 2m) * 4**m): exactly 1 at m = 0 and strictly
    negative for every m >= 1.
    """
    if m < 0:
        raise BadIndex("series index must be >= 0")
    return Fraction(math.comb(2 * m, m), (1 - 2 * m) * 4**m)


def central_binomial_ratio(n: int) -> Fraction:
    """C(2n, n) / 4**n, the scale of the sqrt-series tail sums."""
    if n < 0:
        raise BadIndex("index must be >= 0")
    return Fraction(math.comb(2 * n, n), 4**n)


def root_series_coeffs(p: int, M: int) -> list[Fraction]:
    """Coefficients c_0..c_M of (1 - z)**(1/p) for integer p >= 2.

    c_0 = 1 and c_m = c_{m-1} * (m - 1 - 1/p) / m, which is negative for
    every m >= 1.
    """
    if p < 2:
        raise BadRootOrder(f"root order must be >= 2, got {p}")
    if M < 0:
        raise BadIndex("series cutoff must be >= 0")
    cs = [Fraction(1)]
    for m in range(1, M + 1):
        cs.append(cs[-1] * Fraction((m - 1) * p - 1, m * p))
    return cs


def root_series_coeff(p: int, m: int) -> Fraction:
    """Coefficient of z**m in (1 - z)**(1/p); see root_series_coeffs."""
    return root_series_coeffs(p, m)[m]


def eval_poly_complex(p: Polynomial, re: RationalLike, im: RationalLike):
    """Exact Horner evaluation at the complex rational point re + im*i.

    Returns the (real, imaginary) parts as Fractions.
    """
    re, im = as_fraction(re), as_fraction(im)
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def eval_ratfun_complex(f: RationalFunction, re: RationalLike, im: RationalLike):
    """Exact value of f at re + im*i as a (real, imaginary) Fraction pair."""
    nr, ni = eval_poly_complex(f.num, re, im)
    dr, di = eval_poly_complex(f.den, re, im)
    norm = dr * dr + di * di
    if norm == 0:
        raise PoleAtPoint(f"denominator vanishes at {re}+{im}i")
    return (nr * dr + ni * di) / norm, (ni * dr - nr * di) / norm


def poly_to_json(p: Polynomial) -> list[str]:
    """Coefficient list as base-10 strings, index = power of z."""
    return [str(c) for c in p.coeffs]


def poly_from_json(items: Sequence[str]) -> Polynomial:
    return Polynomial(Fraction(s) for s in items)
