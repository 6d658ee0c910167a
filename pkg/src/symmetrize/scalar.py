"""Scalar backends.

Two arithmetic backends are supported.  ``EXACT`` works with
:class:`fractions.Fraction` and decides signs exactly.  :class:`Approx`
works with ``float`` and treats anything within ``tol`` of zero as zero.
Every geometric routine receives its backend from the polytopes it works on,
so the choice made at construction time propagates through a whole pipeline.
"""

from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Number = Union[Fraction, float, int]

#: Tolerance used by results reported to the user (factor equalities etc).
REPORT_TOL = 1e-7
DEFAULT_TOL = 1e-9


class Backend:
    """Common interface of the two backends."""

    exact: bool = False
    tol: float = 0.0
    name: str = ""

    def convert(self, x) -> Number:
        raise NotImplementedError

    def vec(self, xs: Iterable) -> tuple:
        return tuple(self.convert(x) for x in xs)

    def is_zero(self, x) -> bool:
        raise NotImplementedError

    def sign(self, x) -> int:
        if self.is_zero(x):
            return 0
        return 1 if x > 0 else -1

    def is_pos(self, x) -> bool:
        return self.sign(x) > 0

    def is_neg(self, x) -> bool:
        return self.sign(x) < 0

    def eq(self, x, y) -> bool:
        return self.is_zero(x - y)

    def le(self, x, y) -> bool:
        return self.sign(x - y) <= 0

    def sqrt(self, x):
        raise NotImplementedError

    def vectors_equal(self, u: Sequence, v: Sequence) -> bool:
        return all(self.is_zero(a - b) for a, b in zip(u, v))


class ExactBackend(Backend):
    exact = True
    tol = 0.0
    name = "exact"

    def convert(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, float):
            # floats enter the exact world only through their shortest repr
            return Fraction(repr(x))
        if isinstance(x, str):
            return parse_scalar(x)
        return Fraction(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def sqrt(self, x):
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp == p and rq * rq == q:
            return Fraction(rp, rq)
        raise ValueError(f"square root of {x} is irrational")

    def __repr__(self) -> str:
        return "EXACT"

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactBackend)

    def __hash__(self) -> int:
        return hash("exact")


class Approx(Backend):
    exact = False
    name = "approx"

    def __init__(self, tol: float = DEFAULT_TOL):
        if not tol > 0:
            raise ValueError("tolerance must be positive")
        self.tol = float(tol)

    def convert(self, x) -> float:
        if isinstance(x, str):
            return float(parse_scalar(x))
        return float(x)

    def is_zero(self, x) -> bool:
        return abs(x) <= self.tol

    def sqrt(self, x):
        return math.sqrt(x)

    def __repr__(self) -> str:
        return f"Approx(tol={self.tol!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Approx) and other.tol == self.tol

    def __hash__(self) -> int:
        return hash(("approx", self.tol))


EXACT = ExactBackend()
APPROX = Approx()


def backend_for(name: str, tol: float | None = None) -> Backend:
    if name == "exact":
        return EXACT
    if name == "approx":
        return Approx(DEFAULT_TOL if tol is None else tol)
    raise ValueError(f"unknown backend {name!r}")


def common_backend(*backends: Backend) -> Backend:
    """Exact only if every input is exact; otherwise the loosest approx."""
    approx = [b for b in backends if not b.exact]
    if not approx:
        return EXACT
    return max(approx, key=lambda b: b.tol)


def parse_scalar(text) -> Fraction:
    """Parse ``"p/q"``, a decimal string or a number into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return Fraction(repr(text))
    t = str(text).strip()
    if "/" in t:
        p, q = t.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(Decimal(t))


def format_scalar(x) -> str:
    """Serialize a scalar: ``"p/q"`` for rationals, shortest repr for floats."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def to_float(x) -> float:
    return float(x)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def primitive_int_vector(v: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    if g > 1:
        ints = [x // g for x in ints]
    return ints
