"""Executable forms of the finer structural results: digit-capped
representability, the four equivalent conditions for n*p being Zumkeller,
closed-form predictions for practical*prime-power products, and the
necessary-condition prefilter for even Zumkeller-not-half candidates."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import Factorization, divisors, factorize, is_prime, sigma
from .classify import is_practical
from .errors import CapacityError, DomainError
from .partition import reachable_sums_mask, subset_sum_decision, _bitset_subset


@dataclass(frozen=True)
class DigitBounds:
    """Caps A_0..A_l on base-p digits: representable numbers are the
    sums C_0 + C_1 p + ... + C_l p^l with 0 <= C_i <= A_i."""

    p: int
    caps: tuple[int, ...]

    @property
    def max_value(self) -> int:
        return sum(a * self.p**i for i, a in enumerate(self.caps))


def digit_conditions_hold(b: DigitBounds) -> bool:
    """True iff A_0 + A_1 p + ... + A_i p^i + 1 >= p^(i+1) for every
    0 <= i <= l-1; exactly when every M <= max_value is representable.

    Trailing zero caps add nothing representable, so they are trimmed
    before the check; the equivalence needs a nonzero top cap."""
    caps = list(b.caps)
    while caps and caps[-1] == 0:
        caps.pop()
    prefix = 0
    for i in range(len(caps) - 1):
        prefix += caps[i] * b.p**i
        if prefix + 1 < b.p ** (i + 1):
            return False
    return True


def digit_decompose(M: int, b: DigitBounds) -> tuple[int, ...] | None:
    """Greedy top-down digits C_i <= A_i with sum C_i p^i = M, or None.
    Succeeds for every M in range whenever digit_conditions_hold."""
    if M < 0 or M > b.max_value:
        raise DomainError(f"M={M} outside [0, {b.max_value}]")
    rem = M
    out = [0] * len(b.caps)
    for i in range(len(b.caps) - 1, -1, -1):
        out[i] = min(b.caps[i], rem // b.p**i)
        rem -= out[i] * b.p**i
    return tuple(out) if rem == 0 else None


def _condition_i(n: int, p: int) -> bool:
    """n*p is Zumkeller, by direct subset-sum decision."""
    d = divisors(factorize(n * p))
    s = d.sigma
    if s % 2 or s < 2 * n * p:
        return False
    return subset_sum_decision(d.divisors, (s - 2 * n * p) // 2, excluded={n * p})


def _condition_ii(divs: tuple[int, ...], total: int, p: int) -> bool:
    """Exists a split (D1,D2) of the divisors with p*(sum D2 - sum D1)
    equal to a signed +/- resum of all divisors, i.e. total - 2s for
    some subset sum s."""
    reach = reachable_sums_mask(divs)
    k = len(divs)
    for bits in range(1 << (k - 1)):  # fix divs[-1] in D2; sign symmetry
        s1 = sum(divs[i] for i in range(k - 1) if (bits >> i) & 1)
        diff = p * (total - 2 * s1)
        if (total - diff) % 2:
            continue
        s3 = (total - diff) // 2
        if 0 <= s3 <= total and (reach >> s3) & 1:
            return True
    return False


def _iii_target_hit(mask1: int, mask2: int, t: int) -> bool:
    """Exists a in sums(mask2), b in sums(mask1) with a - b = t."""
    if t >= 0:
        return (mask2 >> t) & mask1 != 0
    return (mask1 >> -t) & mask2 != 0


def _condition_iii(divs: tuple[int, ...], p: int) -> bool:
    """Exists a split (D1,D2) with (p+1)(sum D2 - sum D1)/2 equal to a
    subset sum of D2 minus a subset sum of D1."""
    k = len(divs)
    for bits in range(1 << (k - 1)):
        d1 = [divs[i] for i in range(k - 1) if (bits >> i) & 1]
        d2 = [divs[i] for i in range(k - 1) if not (bits >> i) & 1] + [divs[-1]]
        t2 = (p + 1) * (sum(d2) - sum(d1))
        if t2 % 2:
            continue
        if _iii_target_hit(reachable_sums_mask(d1), reachable_sums_mask(d2), t2 // 2):
            return True
    return False


def _condition_iv(divs: tuple[int, ...], p: int) -> bool:
    """Exists a 4-way split A1..A4 with (p+1)sum(A1) + (p-1)sum(A2) =
    (p+1)sum(A3) + (p-1)sum(A4): zero must be a signed weighted sum with
    per-divisor weights +/-(p+1)d and +/-(p-1)d."""
    sums = {0}
    for d in divs:
        w1, w2 = (p + 1) * d, (p - 1) * d
        sums = {s + w for s in sums for w in (w1, w2, -w1, -w2)}
    return 0 in sums


def multiplyz_equivalence(n: int, p: int,
                          max_divisors: int = 16) -> tuple[bool, bool, bool, bool]:
    """Evaluate the four equivalent Zumkeller conditions for n*p, each by
    its own exhaustive search, and report all four."""
    if not is_prime(p) or gcd(n, p) != 1:
        raise DomainError(f"p={p} must be a prime coprime to n={n}")
    d = divisors(factorize(n))
    if len(d.divisors) > max_divisors:
        raise CapacityError(
            f"{n} has {len(d.divisors)} divisors, above exhaustive cap {max_divisors}"
        )
    return (
        _condition_i(n, p),
        _condition_ii(d.divisors, d.sigma, p),
        _condition_iii(d.divisors, p),
        _condition_iv(d.divisors, p),
    )


def condition_iii_for_partition(d1, d2, p: int):
    """Witness for the (p+1)/2-difference condition on a given split:
    (subset of d2, subset of d1) whose sums differ by
    (p+1)(sum d2 - sum d1)/2, or None."""
    t2 = (p + 1) * (sum(d2) - sum(d1))
    if t2 % 2:
        return None
    t = t2 // 2
    d1s, d2s = sorted(d1), sorted(d2)
    mask2 = reachable_sums_mask(d2s)
    # enumerate subset sums b of d1 and complete with a = t + b from d2
    for b in sorted({s for s in _subset_sums(d1s)}):
        a = t + b
        if 0 <= a <= sum(d2s) and (mask2 >> a) & 1:
            sub1 = _bitset_subset(d1s, b)
            sub2 = _bitset_subset(d2s, a)
            return sorted(sub2), sorted(sub1)
    return None


def _subset_sums(values):
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums}
    return sums


@dataclass(frozen=True)
class TheoremPrediction:
    zumkeller: bool
    half_zumkeller: bool


def practical_times_prime_power(f: Factorization, p: int, l: int) -> TheoremPrediction:
    """Closed-form status of n*p^l for practical n and coprime prime p:
    both yes when sigma(n) is even; otherwise both hold exactly when
    p <= sigma(n) and l is odd. No search involved."""
    if not is_practical(f):
        raise DomainError(f"{f.n} is not practical")
    if not is_prime(p) or gcd(f.n, p) != 1:
        raise DomainError(f"p={p} must be a prime coprime to n={f.n}")
    if l < 1:
        raise DomainError(f"need l >= 1, got {l}")
    s = sigma(f)
    if s % 2 == 0:
        return TheoremPrediction(True, True)
    verdict = p <= s and l % 2 == 1
    return TheoremPrediction(verdict, verdict)


@dataclass(frozen=True)
class CounterexampleCandidate:
    """Even n with factorization 2^k * p1^k1 * ... * pm^km and the
    smallest index j (1-based over the odd primes) where the prime
    overshoots the prefix divisor sum plus one, if any."""

    n: int
    k: int
    odd_factors: tuple[tuple[int, int], ...]
    j: int | None

    @classmethod
    def from_factorization(cls, f: Factorization) -> "CounterexampleCandidate":
        if f.n % 2:
            raise DomainError(f"n={f.n} must be even")
        k = f.factors[0][1]
        odd = f.factors[1:]
        prefix_sigma = 2 ** (k + 1) - 1
        j = None
        for idx, (p, e) in enumerate(odd, start=1):
            if p > prefix_sigma + 1:
                j = idx
                break
            prefix_sigma *= (p ** (e + 1) - 1) // (p - 1)
        return cls(f.n, k, odd, j)


def znoth_prefilter(c: CounterexampleCandidate) -> bool:
    """True iff c could still be even Zumkeller but not half-Zumkeller:
    some odd prime overshoots its prefix sigma plus one, the exponents
    before the first overshoot are all even, the overshoot is not at the
    last prime, and sigma(n) >= 3n."""
    if c.j is None:
        return False
    if c.j > len(c.odd_factors) - 1:
        return False
    if any(e % 2 for _, e in c.odd_factors[: c.j - 1]):
        return False
    s = sigma(factorize(c.n))
    return s >= 3 * c.n
