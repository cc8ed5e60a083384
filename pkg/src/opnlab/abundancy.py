"""Divisor sums, reciprocal divisor sums, and truncated prime products.

For n = prod p^h the divisor sum is sigma(n) = prod (p^(h+1)-1)/(p-1) and
the reciprocal-divisor sum sigma_{-1}(n) = prod sum_{k=0..h} p^-k equals
sigma(n)/n exactly; it is 2 precisely for perfect numbers.  The truncated
variant keeps only the first alpha+1 terms of each geometric factor and
needs nothing but the radical, which is what makes exponent-free screening
possible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidArgument
from .primes import Factorization, is_prime


class Classification(enum.Enum):
    DEFICIENT = "Deficient"
    PERFECT = "Perfect"
    ABUNDANT = "Abundant"


@dataclass(frozen=True)
class AbundancyReport:
    n: int
    sigma: int
    sigma_minus_one: Fraction
    classification: Classification

    def __post_init__(self):
        if self.sigma_minus_one * self.n != self.sigma:
            raise InvalidArgument("sigma_minus_one must equal sigma/n exactly")


def sigma(f: Factorization) -> int:
    """Exact divisor sum; 1 for the empty factorization."""
    total = 1
    for p, h in f.factors:
        total *= (p ** (h + 1) - 1) // (p - 1)
    return total


def _reciprocal_geometric(p: int, h: int) -> Fraction:
    # sum_{k=0..h} p^-k
    return Fraction(p ** (h + 1) - 1, p**h * (p - 1))


def sigma_minus_one(f: Factorization) -> Fraction:
    """Exact reciprocal-divisor sum, prod over p|n of sum_{k=0..h_p} p^-k."""
    total = Fraction(1)
    for p, h in f.factors:
        total *= _reciprocal_geometric(p, h)
    return total


def abundancy_report(f: Factorization) -> AbundancyReport:
    s = sigma(f)
    ratio = Fraction(s, f.n)
    if ratio < 2:
        cls = Classification.DEFICIENT
    elif ratio == 2:
        cls = Classification.PERFECT
    else:
        cls = Classification.ABUNDANT
    return AbundancyReport(n=f.n, sigma=s, sigma_minus_one=ratio, classification=cls)


def _check_prime_set(primes) -> tuple[int, ...]:
    ps = tuple(sorted(int(p) for p in primes))
    for a, b in zip(ps, ps[1:]):
        if a == b:
            raise InvalidArgument(f"duplicate prime {a}")
    for p in ps:
        if not is_prime(p):
            raise InvalidArgument(f"{p} is not prime")
    return ps


def truncated_product(primes, alpha: int) -> Fraction:
    """prod over the given primes of sum_{i=0..alpha} p^-i, exactly."""
    if not isinstance(alpha, int) or alpha < 1:
        raise InvalidArgument(f"alpha must be an integer >= 1, got {alpha!r}")
    total = Fraction(1)
    for p in _check_prime_set(primes):
        total *= _reciprocal_geometric(p, alpha)
    return total


def geometric_split_check(p: int, h: int, alpha: int) -> bool:
    """Verify the block split of a truncated geometric sum, term by term.

    Checks that sum_{k=0..(alpha+1)*floor(h/(alpha+1))+alpha} p^-k factors as
    (sum_{i=0..alpha} p^-i) * (sum_{j=0..floor(h/(alpha+1))} p^-(j(alpha+1)))
    and that the extended cutoff covers h.  Both sides are summed explicitly
    rather than through any closed form, so the check is independent of the
    geometric identities used elsewhere.
    """
    if not is_prime(p):
        raise InvalidArgument(f"{p} is not prime")
    if h < 0 or alpha < 1:
        raise InvalidArgument(f"need h >= 0 and alpha >= 1, got h={h}, alpha={alpha}")
    blocks = h // (alpha + 1)
    cutoff = (alpha + 1) * blocks + alpha
    lhs = sum(Fraction(1, p**k) for k in range(cutoff + 1))
    inner = sum(Fraction(1, p**i) for i in range(alpha + 1))
    outer = sum(Fraction(1, p ** (j * (alpha + 1))) for j in range(blocks + 1))
    return lhs == inner * outer and cutoff >= h
