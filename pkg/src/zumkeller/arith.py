"""Factorization, primality, divisor enumeration, and divisor-sum arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import CapacityError, DomainError, SigmaRangeError

MAX_N = 2**63 - 1
SIGMA_MAX = 2**63 - 1
DEFAULT_DIVISOR_CAP = 1 << 20

# Sieves above this size are not cached; trial division falls back to a wheel.
_MAX_SIEVE = 1 << 22


@lru_cache(maxsize=8)
def prime_sieve(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by Eratosthenes over a bytearray."""
    if limit < 2:
        return ()
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return tuple(i for i in range(2, limit + 1) if flags[i])


def _primes_for(n: int) -> tuple[int, ...]:
    """Cached prime list covering trial division up to sqrt(n)."""
    need = isqrt(n) + 1
    limit = 1 << 12
    while limit < need and limit < _MAX_SIEVE:
        limit <<= 2
    return prime_sieve(min(limit, _MAX_SIEVE))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    root = isqrt(n)
    for p in _primes_for(n):
        if p > root:
            return True
        if n % p == 0:
            return n == p
    # beyond the cached sieve: continue on a 6k+-1 wheel
    d = _primes_for(n)[-1] | 1
    while d <= root:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: strictly increasing primes, exponents >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def exponent_of(self, p: int) -> int:
        for q, k in self.factors:
            if q == p:
                return k
        return 0

    def validate(self) -> None:
        prod = 1
        prev = 0
        for p, k in self.factors:
            if p <= prev or k < 1 or not is_prime(p):
                raise DomainError(f"malformed factorization for {self.n}")
            prev = p
            prod *= p**k
        if prod != self.n:
            raise DomainError(f"factors do not multiply back to {self.n}")


@dataclass(frozen=True)
class DivisorSet:
    """All positive divisors of n, sorted ascending, with the divisor sum."""

    n: int
    divisors: tuple[int, ...]
    sigma: int

    @property
    def proper(self) -> tuple[int, ...]:
        return self.divisors[:-1]


def factorize(n: int) -> Factorization:
    """Trial-division factorization; factorize(1) has an empty factor list."""
    if n < 1 or n > MAX_N:
        raise DomainError(f"n must be in [1, 2^63-1], got {n}")
    m = n
    factors = []
    for p in _primes_for(n):
        if p * p > m:
            break
        if m % p == 0:
            k = 1
            m //= p
            while m % p == 0:
                k += 1
                m //= p
            factors.append((p, k))
    else:
        # sieve exhausted before sqrt(m); continue with a simple odd wheel
        d = _primes_for(n)[-1] | 1 if n > 3 else 3
        while d * d <= m:
            if m % d == 0:
                k = 0
                while m % d == 0:
                    k += 1
                    m //= d
                factors.append((d, k))
            d += 2
    if m > 1:
        factors.append((m, 1))
        factors.sort()
    return Factorization(n, tuple(factors))


def sigma(f: Factorization) -> int:
    """Sum of all positive divisors, by the multiplicative product formula."""
    total = 1
    for p, k in f.factors:
        total *= (p ** (k + 1) - 1) // (p - 1)
        if total > SIGMA_MAX:
            raise SigmaRangeError(f"sigma({f.n}) exceeds 2^63-1")
    return total


def divisors(f: Factorization, cap: int = DEFAULT_DIVISOR_CAP) -> DivisorSet:
    """All divisors by mixed-radix expansion over the exponent vectors."""
    count = 1
    for _, k in f.factors:
        count *= k + 1
    if count > cap:
        raise CapacityError(f"{f.n} has {count} divisors, above cap {cap}")
    divs = [1]
    for p, k in f.factors:
        powers = [p**j for j in range(1, k + 1)]
        divs += [d * q for q in powers for d in divs]
    divs.sort()
    return DivisorSet(f.n, tuple(divs), sigma(f))


def factorize_range(lo: int, hi: int) -> list[Factorization]:
    """Factorizations of every n in [lo, hi] by one segmented sieve pass;
    much faster than per-n trial division when scanning ranges."""
    if lo < 1 or hi > MAX_N or lo > hi:
        raise DomainError(f"need 1 <= lo <= hi <= 2^63-1, got [{lo}, {hi}]")
    rem = list(range(lo, hi + 1))
    facs: list[list[tuple[int, int]]] = [[] for _ in rem]
    root = isqrt(hi)
    for p in _primes_for(hi):
        if p > root:
            break
        for m in range((lo + p - 1) // p * p, hi + 1, p):
            i = m - lo
            k = 0
            while rem[i] % p == 0:
                rem[i] //= p
                k += 1
            facs[i].append((p, k))
    for i, r in enumerate(rem):
        if r > 1:
            facs[i].append((r, 1))
    return [Factorization(lo + i, tuple(f)) for i, f in enumerate(facs)]


def abundance_class(f: Factorization) -> str:
    """'deficient', 'perfect', or 'abundant' by exact comparison of sigma with 2n."""
    s = sigma(f)
    if s < 2 * f.n:
        return "deficient"
    if s == 2 * f.n:
        return "perfect"
    return "abundant"
