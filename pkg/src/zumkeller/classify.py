"""Decision predicates: Zumkeller, half-Zumkeller, practical, quasi-practical.

Cheap shortcuts run before any subset-sum search, and each decided
predicate records which shortcut fired. Results are tri-state: "unknown"
appears only when the search engines hit a capacity limit, never as a
soft "no".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import Factorization, divisors, factorize, sigma
from .errors import CapacityError
from .partition import (
    DEFAULT_CONFIG,
    PartitionWitness,
    SearchConfig,
    chain_condition_holds,
    find_half_zumkeller_witness,
    find_zumkeller_witness,
    reachable_sums_mask,
    subset_sum_decision,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"

_REACHABILITY_CAP = 1 << 26


def is_practical(f: Factorization) -> bool:
    """Smallest-prime-first growth test: 2 divides n and each next prime
    is at most one more than the divisor sum of the preceding part.
    The empty product makes 1 practical."""
    if f.n == 1:
        return True
    if f.factors[0][0] != 2:
        return False
    prefix_sigma = 1
    for p, k in f.factors:
        if p > prefix_sigma + 1:
            return False
        prefix_sigma *= (p ** (k + 1) - 1) // (p - 1)
    return True


def sigma_reachability_check(f: Factorization) -> bool:
    """True iff every m <= sigma(n) is a sum of distinct divisors of n.
    Test oracle for is_practical; exhaustive bitset, so capped."""
    d = divisors(f)
    if d.sigma > _REACHABILITY_CAP:
        raise CapacityError(f"sigma({f.n})={d.sigma} above reachability cap")
    mask = reachable_sums_mask(d.divisors)
    return mask == (1 << (d.sigma + 1)) - 1


def is_quasi_practical(f: Factorization) -> bool:
    """True iff every m <= sigma(n)-n is a sum of distinct divisors of n
    other than n itself. 1 and primes are quasi-practical vacuously."""
    d = divisors(f)
    span = d.sigma - f.n
    if span > _REACHABILITY_CAP:
        raise CapacityError(f"sigma({f.n})-n={span} above reachability cap")
    mask = reachable_sums_mask(d.proper)
    return mask == (1 << (span + 1)) - 1


def odd_zumkeller_signature_filter(f: Factorization) -> bool:
    """Necessary conditions on the prime signature of an odd Zumkeller
    number; False means certainly not Zumkeller, True means not excluded.

    Requires at least three distinct primes and product(p/(p-1)) >= 2,
    plus the small-m prime constraints that follow from that bound."""
    primes = [p for p, _ in f.factors]
    m = len(primes)
    if m < 3:
        return False
    num = den = 1
    for p in primes:
        num *= p
        den *= p - 1
    if num < 2 * den:
        return False
    if m <= 6 and (primes[0] != 3 or primes[1] not in (5, 7, 11)):
        return False
    if m <= 4 and primes[1] not in (5, 7):
        return False
    if m == 3 and (primes[1] != 5 or primes[2] not in (7, 11, 13)):
        return False
    return True


def _zumkeller_status(f: Factorization, s: int,
                      config: SearchConfig) -> tuple[str, str | None]:
    n = f.n
    if s % 2:
        return NO, "sigma_odd"
    if s < 2 * n:
        return NO, "deficient"
    if n % 2 and not odd_zumkeller_signature_filter(f):
        return NO, "odd_signature"
    if is_practical(f):
        return YES, "practical_even_sigma"
    try:
        d = divisors(f, cap=config.max_divisors)
        if chain_condition_holds(d):
            return YES, "chain"
        hit = subset_sum_decision(d.divisors, (s - 2 * n) // 2,
                                  excluded={n}, config=config)
    except CapacityError:
        return UNKNOWN, None
    return (YES, None) if hit else (NO, None)


def _half_status(f: Factorization, s: int, zk: str,
                 config: SearchConfig) -> tuple[str, str | None]:
    n = f.n
    if n == 1:
        return NO, "unit"
    if n % 2:
        if isqrt(n) ** 2 != n:
            return NO, "odd_not_square"
        try:
            d = divisors(f, cap=config.max_divisors)
            hit = subset_sum_decision(d.proper, (s - n) // 2, config=config)
        except CapacityError:
            return UNKNOWN, None
        return (YES, None) if hit else (NO, None)
    if s % 2:
        return NO, "sigma_odd"
    if zk == NO:
        # even half-Zumkeller numbers are Zumkeller
        return NO, "not_zumkeller"
    if zk == YES:
        if 2 * s < 6 * n:
            return YES, "sigma_lt_3n"
        if n % 6 == 0 and 3 * s < 10 * n:
            return YES, "sigma_lt_10n_3"
    if is_practical(f):
        return YES, "practical_even_sigma"
    half_f = factorize(n // 2)
    if _zumkeller_status(half_f, sigma(half_f), config)[0] == YES:
        return YES, "double_of_zumkeller"
    try:
        d = divisors(f, cap=config.max_divisors)
        if chain_condition_holds(d):
            # the chain partition separates n and n/2
            return YES, "chain"
        hit = subset_sum_decision(d.divisors, (s - 2 * n) // 2,
                                  excluded={n, n // 2}, config=config)
    except CapacityError:
        return UNKNOWN, None
    return (YES, None) if hit else (NO, None)


@dataclass(frozen=True)
class ClassificationRecord:
    n: int
    sigma: int
    abundance: str
    zumkeller: str
    half_zumkeller: str
    practical: bool
    quasi_practical: bool
    shortcut: str | None
    zumkeller_witness: PartitionWitness | None = None
    half_zumkeller_witness: PartitionWitness | None = None

    def to_json_dict(self, with_witnesses: bool = False) -> dict:
        obj = {
            "n": self.n,
            "sigma": self.sigma,
            "abundance": self.abundance,
            "zumkeller": self.zumkeller,
            "half_zumkeller": self.half_zumkeller,
            "practical": self.practical,
            "quasi_practical": self.quasi_practical,
            "shortcut": self.shortcut,
        }
        if with_witnesses:
            obj["zumkeller_witness"] = (
                self.zumkeller_witness.to_json_dict() if self.zumkeller_witness else None
            )
            obj["half_zumkeller_witness"] = (
                self.half_zumkeller_witness.to_json_dict()
                if self.half_zumkeller_witness else None
            )
        return obj


def is_zumkeller(f: Factorization, config: SearchConfig = DEFAULT_CONFIG) -> str:
    return _zumkeller_status(f, sigma(f), config)[0]


def is_half_zumkeller(f: Factorization, config: SearchConfig = DEFAULT_CONFIG) -> str:
    s = sigma(f)
    zk = _zumkeller_status(f, s, config)[0]
    return _half_status(f, s, zk, config)[0]


def classify_number(n: int, config: SearchConfig = DEFAULT_CONFIG,
                    with_witnesses: bool = False) -> ClassificationRecord:
    f = factorize(n)
    s = sigma(f)
    practical = is_practical(f)
    try:
        quasi = is_quasi_practical(f)
    except CapacityError:
        quasi = practical  # practical implies quasi-practical; safe lower bound
    zk, zk_tag = _zumkeller_status(f, s, config)
    hz, hz_tag = _half_status(f, s, zk, config)
    zw = hw = None
    if with_witnesses:
        try:
            d = divisors(f, cap=config.max_divisors)
            if zk == YES:
                zw = find_zumkeller_witness(d, config)
            if hz == YES:
                hw = find_half_zumkeller_witness(d, config)
        except CapacityError:
            pass
    if s < 2 * n:
        abundance = "deficient"
    elif s == 2 * n:
        abundance = "perfect"
    else:
        abundance = "abundant"
    return ClassificationRecord(
        n=n, sigma=s, abundance=abundance,
        zumkeller=zk, half_zumkeller=hz,
        practical=practical, quasi_practical=quasi,
        shortcut=zk_tag or hz_tag,
        zumkeller_witness=zw, half_zumkeller_witness=hw,
    )
