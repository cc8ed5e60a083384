"""Prime generation, primality testing, and desk-scale factorization.

A single growable segmented sieve backs the indexed prime stream
(``nth_prime``, ``primes_window``).  Primality for inputs beyond the sieve
uses Miller-Rabin with a fixed witness set that is deterministic for all
inputs below 3.3e24 (covers 64-bit), then trial division within the sieve
budget.  No probabilistic answers are ever returned.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidArgument, ResourceLimit

DEFAULT_PRIME_CAP = 10**6  # how many primes the sieve may generate

# Witnesses proving compositeness deterministically for n < _MR_BOUND
# (Sinclair/Jaeschke-style verified set; bound exceeds 2^64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND = 3317044064679887385961981

_SEGMENT = 1 << 20


def _simple_sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return [i for i, f in enumerate(flags) if f]


class _Sieve:
    """Segmented sieve of Eratosthenes with an incremental, growable bound."""

    def __init__(self, cap: int = DEFAULT_PRIME_CAP):
        if cap < 1:
            raise InvalidArgument(f"prime cap must be >= 1, got {cap}")
        self.cap = cap
        self._lock = threading.RLock()
        self._limit = 1024
        self._primes = _simple_sieve(self._limit)

    @property
    def limit(self) -> int:
        return self._limit

    @property
    def primes(self) -> list[int]:
        return self._primes

    def ensure_limit(self, n: int) -> None:
        """Extend the sieve so every prime <= n is present."""
        with self._lock:
            if n <= self._limit:
                return
            # base primes up to sqrt(n) must exist before segment marking
            self.ensure_limit(math.isqrt(n) + 1)
            target = max(n, 2 * self._limit)
            lo = self._limit + 1
            while lo <= target:
                hi = min(lo + _SEGMENT, target + 1)
                mark = bytearray([1]) * (hi - lo)
                for p in self._primes:
                    if p * p >= hi:
                        break
                    start = max(p * p, ((lo + p - 1) // p) * p)
                    step = (hi - 1 - start) // p + 1
                    mark[start - lo :: p] = b"\x00" * step
                self._primes.extend(i + lo for i, f in enumerate(mark) if f)
                lo = hi
            self._limit = target

    def ensure_count(self, k: int) -> None:
        """Grow until at least k primes are sieved; k must respect the cap."""
        if k > self.cap:
            raise ResourceLimit(f"requested prime #{k} exceeds the sieve cap of {self.cap}")
        with self._lock:
            while len(self._primes) < k:
                kk = max(k, 6)
                # Rosser bound p_k < k(ln k + ln ln k), padded; the loop
                # re-doubles if the estimate ever falls short.
                est = int(kk * (math.log(kk) + math.log(math.log(kk)))) + 16
                self.ensure_limit(max(est, 2 * self._limit))

    def contains(self, n: int) -> bool:
        """Membership for n <= limit (caller must check the range)."""
        i = bisect_left(self._primes, n)
        return i < len(self._primes) and self._primes[i] == n


_default_sieve = _Sieve()
_sieve_swap_lock = threading.Lock()


def set_prime_cap(cap: int) -> None:
    """Replace the sieve cap (count of primes the stream may produce)."""
    global _default_sieve
    with _sieve_swap_lock:
        sieve = _Sieve(cap)
        _default_sieve = sieve


def prime_cap() -> int:
    return _default_sieve.cap


def _miller_rabin(n: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test; never probabilistic.

    Raises ResourceLimit only for inputs beyond 3.3e24 whose certification
    would exceed the trial-division budget.
    """
    if n < 2:
        return False
    sieve = _default_sieve
    if n <= sieve.limit:
        return sieve.contains(n)
    for p in _MR_WITNESSES:
        if n % p == 0:
            return False
    if n < _MR_BOUND:
        return _miller_rabin(n)
    # gigantic input: certify by trial division, budget = sieve cap
    root = math.isqrt(n)
    idx = 0
    while True:
        if idx >= sieve.cap:
            raise ResourceLimit(
                f"primality of {n} needs trial division past the cap of {sieve.cap} primes"
            )
        sieve.ensure_count(idx + 1)
        p = sieve.primes[idx]
        if p > root:
            return True
        if n % p == 0:
            return False
        idx += 1


def nth_prime(k: int) -> int:
    """The k-th prime, 1-based (p_1 = 2)."""
    if k < 1:
        raise InvalidArgument(f"prime index must be >= 1, got {k}")
    sieve = _default_sieve
    sieve.ensure_count(k)
    return sieve.primes[k - 1]


def primes_window(start: int, count: int) -> list[int]:
    """Consecutive primes p_start .. p_{start+count-1}; empty when count = 0."""
    if start < 1:
        raise InvalidArgument(f"prime index must be >= 1, got {start}")
    if count < 0:
        raise InvalidArgument(f"window count must be >= 0, got {count}")
    if count == 0:
        return []
    sieve = _default_sieve
    sieve.ensure_count(start + count - 1)
    return sieve.primes[start - 1 : start + count - 1]


@dataclass(frozen=True)
class Factorization:
    """Ordered prime factorization: ((p1, e1), (p2, e2), ...) with p1 < p2 < ...

    The empty tuple represents n = 1.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(p), int(e)) for p, e in self.factors))
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise InvalidArgument(f"primes must be strictly increasing, got {p} after {prev}")
            if e < 1:
                raise InvalidArgument(f"exponent for {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise InvalidArgument(f"{p} is not prime")
            prev = p

    @classmethod
    def from_pairs(cls, pairs) -> "Factorization":
        return cls(tuple(sorted((int(p), int(e)) for p, e in pairs)))

    @classmethod
    def from_int(cls, n: int) -> "Factorization":
        return factorize(n)

    @cached_property
    def n(self) -> int:
        value = 1
        for p, e in self.factors:
            value *= p**e
        return value

    @property
    def radical(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Complete factorization by trial division over the sieved prime stream.

    Residual cofactors that pass the deterministic primality test are
    accepted directly; a composite residual needing primes beyond the cap
    raises ResourceLimit.
    """
    if n < 1:
        raise InvalidArgument(f"factorize requires n >= 1, got {n}")
    if n == 1:
        return Factorization(())
    sieve = _default_sieve
    pairs: list[tuple[int, int]] = []
    residual = n
    idx = 0
    while residual > 1:
        if idx >= sieve.cap:
            if is_prime(residual):
                pairs.append((residual, 1))
                break
            raise ResourceLimit(
                f"residual cofactor {residual} exceeds the trial-division budget"
            )
        sieve.ensure_count(idx + 1)
        p = sieve.primes[idx]
        if p * p > residual:
            pairs.append((residual, 1))
            break
        if residual % p == 0:
            e = 0
            while residual % p == 0:
                residual //= p
                e += 1
            pairs.append((p, e))
            if residual == 1:
                break
            if residual > sieve.limit and is_prime(residual):
                pairs.append((residual, 1))
                break
        idx += 1
    return Factorization(tuple(pairs))
