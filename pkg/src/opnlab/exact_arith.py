"""Exact rational arithmetic and rational-interval enclosures.

Rationals are stdlib ``fractions.Fraction`` (arbitrary-size, always
canonical: reduced, positive denominator).  A ``RatInterval`` is a pair of
rationals certified, by construction, to bracket some real constant; the
three-way ``compare`` decides the position of an exact rational against
the bracket without ever touching floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import InvalidArgument, NonPositiveInterval

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, and numeric strings ('3/4', '1e-30') to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str, _RationalABC)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"not a rational: {value!r}") from exc
    raise InvalidArgument(f"not a rational: {value!r}")


def rat_add(a, b) -> Fraction:
    return as_rational(a) + as_rational(b)


def rat_mul(a, b) -> Fraction:
    return as_rational(a) * as_rational(b)


class Ordering3(enum.Enum):
    """Position of a rational relative to an interval."""

    BELOW = "Below"
    ABOVE = "Above"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class RatInterval:
    """Closed interval [lo, hi] of exact rationals, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise InvalidArgument(f"interval endpoints out of order: {self.lo} > {self.hi}")

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, q) -> bool:
        q = as_rational(q)
        return self.lo <= q <= self.hi

    def encloses(self, other: "RatInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def interval_mul(a: RatInterval, b: RatInterval) -> RatInterval:
    """Product interval for positive intervals: [a.lo*b.lo, a.hi*b.hi].

    Monotone endpoint arithmetic is only sound when both intervals sit
    strictly right of zero, which is all this toolkit needs.
    """
    if a.lo <= 0 or b.lo <= 0:
        raise NonPositiveInterval(f"interval_mul requires lo > 0, got {a} and {b}")
    return RatInterval(a.lo * b.lo, a.hi * b.hi)


def interval_div_scalar(c, b: RatInterval) -> RatInterval:
    """Enclosure of c/x for x in b: [c/b.hi, c/b.lo], c > 0, b.lo > 0."""
    c = as_rational(c)
    if c <= 0:
        raise NonPositiveInterval(f"interval_div_scalar requires c > 0, got {c}")
    if b.lo <= 0:
        raise NonPositiveInterval(f"interval_div_scalar requires b.lo > 0, got {b}")
    return RatInterval(c / b.hi, c / b.lo)


def compare(q, interval: RatInterval) -> Ordering3:
    """Decide q against [lo, hi]: Below if q < lo, Above if q > hi, else Indeterminate.

    Indeterminate means q lies inside the bracket, so the comparison against
    the enclosed constant cannot be settled at this width; refine and retry.
    """
    q = as_rational(q)
    if q < interval.lo:
        return Ordering3.BELOW
    if q > interval.hi:
        return Ordering3.ABOVE
    return Ordering3.INDETERMINATE
