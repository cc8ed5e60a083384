"""Necessary-condition screening for odd perfect number candidates.

Three layers, from structural to analytic:

* ``euler_form_check``: an odd perfect number must be p^b * prod q_i^(2a_i)
  with the single odd-exponent prime p and its exponent b both 1 mod 4.
* ``perfect_check``: sigma(n) = 2n, exactly.
* ``radical_screen``: exponent-free bound tests on the set of distinct
  primes alone.  With alpha = 1 the product prod(1+1/p) must lie strictly
  between 16/pi^2 and 2.  With alpha = 2 the special prime's exponent may
  be 1, so refutation must exclude two cases: every admissible special
  prime q (q = 1 mod 4) via (1+1/q) * prod_{p!=q}(1+1/p+1/p^2), and the
  all-exponents->=2 case via prod(1+1/p+1/p^2), each tested against
  16/(7*zeta(3)) and 2.

All witnesses are exact rationals; threshold comparisons are certified
interval comparisons with automatic refinement.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction

from .abundancy import _check_prime_set, _reciprocal_geometric, sigma
from .constants import Threshold, certified_compare, default_threshold
from .errors import InvalidArgument
from .exact_arith import Ordering3
from .primes import Factorization

MIN_DISTINCT_PRIMES = 9  # every odd perfect number has at least 9 distinct primes


class Outcome(enum.Enum):
    VIOLATES = "Violates"
    CONSISTENT_SO_FAR = "ConsistentSoFar"


class Condition(enum.Enum):
    NOT_ODD = "NotOdd"
    NOT_PERFECT = "NotPerfect"
    EULERIAN_FORM = "EulerianForm"
    TOO_FEW_PRIME_FACTORS = "TooFewPrimeFactors"
    ALPHA1_LOWER_BOUND = "Alpha1LowerBound"
    ALPHA1_UPPER_BOUND = "Alpha1UpperBound"
    ALPHA2_CASE1 = "Alpha2Case1"
    ALPHA2_CASE2 = "Alpha2Case2"
    TRIPLE_EXCLUSION_357 = "TripleExclusion357"


# structural refutations carry no numeric witness
_STRUCTURAL = frozenset(
    {Condition.NOT_ODD, Condition.EULERIAN_FORM, Condition.TOO_FEW_PRIME_FACTORS}
)


class Mode(enum.Enum):
    ALPHA1 = "alpha1"
    ALPHA2_CASE1 = "alpha2case1"
    ALPHA2_CASE2 = "alpha2case2"
    AUTO = "auto"


@dataclass(frozen=True)
class ScreenVerdict:
    """Outcome of one necessary-condition test.

    ``witness`` is the offending product value for bound conditions, or
    sigma(n)/n for the perfect check.  ``case_witnesses`` is only populated
    by the combined alpha=2 screen and records every per-case product that
    had to fail for the refutation to go through.
    """

    outcome: Outcome
    violated_condition: Condition | None = None
    witness: Fraction | None = None
    case_witnesses: tuple[tuple[str, Fraction], ...] | None = None

    def __post_init__(self):
        if self.outcome is Outcome.VIOLATES:
            if self.violated_condition is None:
                raise InvalidArgument("a violation must name the violated condition")
            if (self.witness is None) != (self.violated_condition in _STRUCTURAL):
                raise InvalidArgument(
                    "witness must be present exactly for non-structural violations"
                )
        elif self.violated_condition is not None or self.witness is not None:
            raise InvalidArgument("a consistent verdict carries no condition or witness")

    @property
    def violates(self) -> bool:
        return self.outcome is Outcome.VIOLATES


_CONSISTENT = ScreenVerdict(Outcome.CONSISTENT_SO_FAR)
_NOT_ODD = ScreenVerdict(Outcome.VIOLATES, Condition.NOT_ODD)
_BAD_FORM = ScreenVerdict(Outcome.VIOLATES, Condition.EULERIAN_FORM)
_TOO_FEW = ScreenVerdict(Outcome.VIOLATES, Condition.TOO_FEW_PRIME_FACTORS)


@dataclass(frozen=True)
class EulerForm:
    """n = special_prime^special_exponent * prod q^e with all e even."""

    special_prime: int
    special_exponent: int
    even_part: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.special_prime % 4 != 1:
            raise InvalidArgument(f"special prime must be 1 mod 4, got {self.special_prime}")
        if self.special_exponent % 4 != 1:
            raise InvalidArgument(
                f"special exponent must be 1 mod 4, got {self.special_exponent}"
            )
        for p, e in self.even_part:
            if e % 2 != 0 or e < 2:
                raise InvalidArgument(f"even part needs even exponents >= 2, got {p}^{e}")


def to_euler_form(f: Factorization) -> EulerForm:
    """Split a factorization into Eulerian form, or raise InvalidArgument."""
    if f.factors and f.factors[0][0] == 2:
        raise InvalidArgument("even numbers have no Eulerian form")
    odd_exp = [(p, e) for p, e in f.factors if e % 2 == 1]
    if len(odd_exp) != 1:
        raise InvalidArgument(f"need exactly one odd exponent, found {len(odd_exp)}")
    p, b = odd_exp[0]
    if p % 4 != 1 or b % 4 != 1:
        raise InvalidArgument(f"special prime and exponent must be 1 mod 4, got {p}^{b}")
    return EulerForm(p, b, tuple((q, e) for q, e in f.factors if e % 2 == 0))


def euler_form_check(f: Factorization) -> ScreenVerdict:
    """Structural test of the Eulerian form; n = 1 has no special prime."""
    if f.factors and f.factors[0][0] == 2:
        return _NOT_ODD
    try:
        to_euler_form(f)
    except InvalidArgument:
        return _BAD_FORM
    return _CONSISTENT


def perfect_check(f: Factorization) -> ScreenVerdict:
    s = sigma(f)
    n = f.n
    if s == 2 * n:
        return _CONSISTENT
    return ScreenVerdict(Outcome.VIOLATES, Condition.NOT_PERFECT, Fraction(s, n))


_threshold_lock = threading.Lock()
_thresholds: dict[int, Threshold] = {}


def _decide(q: Fraction, alpha: int) -> Ordering3:
    """Certified position of q against the alpha threshold, kept refined."""
    with _threshold_lock:
        t = _thresholds.get(alpha)
    if t is None:
        t = default_threshold(alpha)
    side, t2 = certified_compare(q, t)
    with _threshold_lock:
        _thresholds[alpha] = t2
    return side


def _odd_prime_set(primes) -> tuple[int, ...]:
    ps = _check_prime_set(primes)
    if ps and ps[0] == 2:
        raise InvalidArgument("radical screening accepts odd primes only")
    return ps


def _alpha1_product(ps) -> Fraction:
    total = Fraction(1)
    for p in ps:
        total *= Fraction(p + 1, p)
    return total


def _alpha2_product(ps, skip=None) -> Fraction:
    total = Fraction(1)
    for p in ps:
        if p != skip:
            total *= _reciprocal_geometric(p, 2)
    return total


def _screen_alpha1(ps) -> ScreenVerdict:
    value = _alpha1_product(ps)
    if value >= 2:
        return ScreenVerdict(Outcome.VIOLATES, Condition.ALPHA1_UPPER_BOUND, value)
    if _decide(value, 1) is Ordering3.BELOW:
        return ScreenVerdict(Outcome.VIOLATES, Condition.ALPHA1_LOWER_BOUND, value)
    return _CONSISTENT


def _outside_alpha2_bounds(value: Fraction) -> bool:
    return value >= 2 or _decide(value, 2) is Ordering3.BELOW


def _screen_alpha2_case2(ps) -> ScreenVerdict:
    value = _alpha2_product(ps)
    if _outside_alpha2_bounds(value):
        return ScreenVerdict(Outcome.VIOLATES, Condition.ALPHA2_CASE2, value)
    return _CONSISTENT


def _screen_alpha2_combined(ps) -> ScreenVerdict:
    """Refute only if the all-even case and every admissible special prime fail.

    With no prime = 1 mod 4 in the set the special-prime case is impossible,
    so the quantification over q is vacuously satisfied and the all-even case
    alone decides.
    """
    case2_value = _alpha2_product(ps)
    cases: list[tuple[str, Fraction]] = [("case2", case2_value)]
    refuted = _outside_alpha2_bounds(case2_value)
    for q in ps:
        if q % 4 != 1:
            continue
        value = Fraction(q + 1, q) * _alpha2_product(ps, skip=q)
        cases.append((f"case1[q={q}]", value))
        if not _outside_alpha2_bounds(value):
            refuted = False
    if not refuted:
        return _CONSISTENT
    condition = (
        Condition.TRIPLE_EXCLUSION_357
        if {3, 5, 7} <= set(ps)
        else Condition.ALPHA2_CASE1
    )
    return ScreenVerdict(Outcome.VIOLATES, condition, case2_value, tuple(cases))


def radical_screen(primes, mode: Mode = Mode.AUTO) -> ScreenVerdict:
    """Exponent-free bound screening on a set of distinct odd primes."""
    ps = _odd_prime_set(primes)
    if mode is Mode.ALPHA1:
        return _screen_alpha1(ps)
    if mode is Mode.ALPHA2_CASE2:
        return _screen_alpha2_case2(ps)
    if mode is Mode.ALPHA2_CASE1:
        return _screen_alpha2_combined(ps)
    if mode is Mode.AUTO:
        if len(ps) < MIN_DISTINCT_PRIMES:
            return _TOO_FEW
        verdict = _screen_alpha1(ps)
        if verdict.violates:
            return verdict
        verdict = _screen_alpha2_combined(ps)
        if verdict.violates:
            return verdict
        return _CONSISTENT
    raise InvalidArgument(f"unknown screening mode: {mode!r}")


def full_screen(f: Factorization) -> list[ScreenVerdict]:
    """Eulerian form, perfect check, then radical screen, in that order.

    An even input cannot feed the odd-only radical screen, so its radical
    verdict is the structural NotOdd refutation.
    """
    verdicts = [euler_form_check(f), perfect_check(f)]
    if f.factors and f.factors[0][0] == 2:
        verdicts.append(_NOT_ODD)
    else:
        verdicts.append(radical_screen(f.radical, Mode.AUTO))
    return verdicts
