"""Upper bounds on the smallest prime factors via consecutive-prime windows.

For a number with m distinct prime factors, the k-th smallest prime factor
(k <= 3) is bounded by sliding a window of m-k+1 consecutive primes: the
window product

    rho_r = prefix(k) * prod_{j=r..r+m-k} (1 + 1/p_j)

strictly decreases as the window slides right and tends to the prefix
product (1 for k=1, 4/3 for k=2, 8/5 for k=3), which sits below the
screening threshold.  The first window index certified below the threshold
therefore bounds the k-th prime factor.  The classical comparison value
floor(2m/3 + 3) is reported alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .abundancy import _reciprocal_geometric
from .constants import Threshold, certified_compare, default_threshold
from .errors import InvalidArgument
from .exact_arith import Ordering3
from .primes import nth_prime, primes_window

_PREFIX_PRIMES = {1: (), 2: (3,), 3: (3, 5)}
TABLE_MIN_M = 9  # an odd perfect number has at least 9 distinct prime factors


@dataclass(frozen=True)
class RhoParams:
    """Window-product parameters: k-th factor bound, m distinct primes,
    window starting at the r-th prime, alpha+1 terms per factor."""

    k: int
    m: int
    r: int
    alpha: int = 1

    def __post_init__(self):
        if self.k not in (1, 2, 3):
            raise InvalidArgument(f"k must be 1, 2, or 3, got {self.k}")
        if self.m < self.k:
            raise InvalidArgument(f"m must be >= k, got m={self.m}, k={self.k}")
        if self.r < 1:
            raise InvalidArgument(f"r must be >= 1, got {self.r}")
        if self.alpha < 1:
            raise InvalidArgument(f"alpha must be >= 1, got {self.alpha}")


@dataclass(frozen=True)
class BoundTableRow:
    m: int
    p_I1: int
    p_I2: int
    p_I3: int
    perisastri: int

    def __post_init__(self):
        if not self.p_I1 < self.p_I2 < self.p_I3:
            raise InvalidArgument(
                f"bound columns must increase: {self.p_I1}, {self.p_I2}, {self.p_I3}"
            )


def rho(params: RhoParams) -> Fraction:
    """Exact window product for the given parameters."""
    total = Fraction(1)
    for p in _PREFIX_PRIMES[params.k]:
        total *= Fraction(p + 1, p)
    for p in primes_window(params.r, params.m - params.k + 1):
        total *= _reciprocal_geometric(p, params.alpha)
    return total


def rho_limit(k: int) -> Fraction:
    """Limit of the window product as the window slides right: the prefix.

    k = 4 would need prefix (4/3)(6/5)(8/7) = 64/35, which already exceeds
    16/pi^2, so no window index can ever fall below the threshold and the
    method stops at the third prime factor.
    """
    if k == 1:
        return Fraction(1)
    if k == 2:
        return Fraction(4, 3)
    if k == 3:
        return Fraction(8, 5)
    raise InvalidArgument(
        f"k must be 1, 2, or 3: the k={k} prefix product is not below the threshold"
    )


def _find_index(k: int, m: int, alpha: int, theta: Threshold) -> tuple[int, Threshold]:
    side, theta = certified_compare(rho_limit(k), theta)
    if side is not Ordering3.BELOW:
        raise InvalidArgument(
            f"prefix product for k={k} is not below the threshold; no bound exists"
        )
    r = 2  # odd candidates only, so windows never start at the prime 2
    while True:
        value = rho(RhoParams(k=k, m=m, r=r, alpha=alpha))
        side, theta = certified_compare(value, theta)
        if side is Ordering3.BELOW:
            return r, theta
        r += 1


def find_I(k: int, m: int, alpha: int = 1, theta: Threshold | None = None) -> int:
    """Smallest window index r >= 2 whose product is certified below theta.

    The window product strictly decreases in r, so every later window is
    below the threshold too and the prime at the returned index is an upper
    bound for the k-th smallest prime factor.
    """
    rho_limit(k)  # validates k before anything else
    if m < k:
        raise InvalidArgument(f"m must be >= k, got m={m}, k={k}")
    if alpha < 1:
        raise InvalidArgument(f"alpha must be >= 1, got {alpha}")
    if theta is None:
        theta = default_threshold(alpha)
    index, _ = _find_index(k, m, alpha, theta)
    return index


def perisastri_bound(m: int) -> int:
    """Classical comparison bound floor(2m/3 + 3) on the lowest prime factor."""
    if m < 1:
        raise InvalidArgument(f"m must be >= 1, got {m}")
    return math.floor(Fraction(2 * m, 3) + 3)


def generate_table(m_min: int, m_max: int, alpha: int = 1) -> list[BoundTableRow]:
    """One row per m in [m_min, m_max]: the three prime bounds plus the
    classical comparison column.  Deterministic."""
    if m_min < TABLE_MIN_M:
        raise InvalidArgument(f"m_min must be >= {TABLE_MIN_M}, got {m_min}")
    if m_max < m_min:
        raise InvalidArgument(f"empty range: m_min={m_min} > m_max={m_max}")
    if alpha < 1:
        raise InvalidArgument(f"alpha must be >= 1, got {alpha}")
    theta = default_threshold(alpha)
    rows = []
    for m in range(m_min, m_max + 1):
        bounds = []
        for k in (1, 2, 3):
            index, theta = _find_index(k, m, alpha, theta)
            bounds.append(nth_prime(index))
        rows.append(
            BoundTableRow(
                m=m,
                p_I1=bounds[0],
                p_I2=bounds[1],
                p_I3=bounds[2],
                perisastri=perisastri_bound(m),
            )
        )
    return rows
