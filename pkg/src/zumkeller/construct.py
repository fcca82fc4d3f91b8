"""Witness lifting: build partition witnesses for new numbers from known
witnesses, by replication constructions rather than fresh search.

Each construction is a proof-mirror: the output is a certificate by
construction and is additionally run through verify_witness before return.
"""

from __future__ import annotations

from math import gcd

from .arith import divisors, factorize, is_prime
from .errors import CapacityError, DomainError, SigmaRangeError
from .partition import PartitionWitness, chain_sign_partition, verify_witness


def _checked(w: PartitionWitness) -> PartitionWitness:
    if not verify_witness(w):
        raise AssertionError(f"lifted witness for {w.n} failed verification")
    return w


def _as_separating_partition(w: PartitionWitness) -> tuple[int, list[int], list[int]]:
    """Full-divisor partition (part_with_n, other_part) of w.n in which n
    and n/2 land in distinct parts. Accepts either witness kind."""
    n = w.n
    if w.kind == "zumkeller":
        if n % 2 == 0 and ((n in w.part_a) == (n // 2 in w.part_a)):
            raise DomainError(f"witness for {n} does not separate n and n/2")
        a, b = list(w.part_a), list(w.part_b)
        return (n, a, b) if n in w.part_a else (n, b, a)
    # half witness: put n back, move n/2 across (reverse of the derivation)
    if n % 2:
        raise DomainError("half-Zumkeller lift requires even n")
    half = n // 2
    if half in w.part_a:
        return n, [x for x in w.part_a if x != half] + [n], list(w.part_b) + [half]
    return n, [x for x in w.part_b if x != half] + [n], list(w.part_a) + [half]


def _finish(n_new: int, part_with_n: list[int], other: list[int],
            kind: str) -> PartitionWitness:
    if kind == "zumkeller":
        return _checked(PartitionWitness(n_new, tuple(sorted(part_with_n)),
                                         tuple(sorted(other)), "zumkeller"))
    # drop n_new, move n_new/2 into its former part
    half = n_new // 2
    part_a = sorted(x for x in part_with_n if x != n_new) + [half]
    part_b = sorted(x for x in other if x != half)
    return _checked(PartitionWitness(n_new, tuple(sorted(part_a)),
                                     tuple(part_b), "half_zumkeller"))


def _replicate(w: PartitionWitness, multipliers: list[int]) -> PartitionWitness:
    """Group construction: copy the base partition once per multiplier.
    Groups ordered by ascending multiplier index, base order preserved."""
    if w.kind == "half_zumkeller":
        n, base_a, base_b = _as_separating_partition(w)
    else:
        n = w.n
        base_a = list(w.part_a) if n in w.part_a else list(w.part_b)
        base_b = list(w.part_b) if n in w.part_a else list(w.part_a)
    part_a, part_b = [], []
    for q in multipliers:
        part_a += [q * d for d in base_a]
        part_b += [q * d for d in base_b]
    return _finish(n * multipliers[-1], part_a, part_b, w.kind)


def lift_coprime_prime_power(w: PartitionWitness, p: int, l: int) -> PartitionWitness:
    """Witness for n*p^l from a witness for n, p a new prime.

    Divisors of n*p^l split into groups by their power of p; each group
    is partitioned like the base, so the sums stay balanced and (for the
    half kind) n*p^l and n*p^l/2 stay in distinct parts."""
    if l < 1 or not is_prime(p):
        raise DomainError(f"need a prime p and l >= 1, got p={p}, l={l}")
    if gcd(w.n, p) != 1:
        raise DomainError(f"p={p} must be coprime to n={w.n}")
    if w.kind == "half_zumkeller" and w.n % 2:
        raise DomainError("half-Zumkeller lift requires even n")
    return _replicate(w, [p**i for i in range(l + 1)])


def lift_same_prime(w: PartitionWitness, p: int, l: int) -> PartitionWitness:
    """Witness for n*p^(l(k+1)) where p^k exactly divides n.

    Block construction: group i holds the base divisors times p^(i(k+1)),
    so the groups are disjoint and each inherits the balanced split."""
    if l < 1:
        raise DomainError(f"need l >= 1, got {l}")
    k = factorize(w.n).exponent_of(p)
    if k == 0:
        raise DomainError(f"p={p} does not divide n={w.n}")
    if w.kind == "half_zumkeller" and w.n % 2:
        raise DomainError("half-Zumkeller lift requires even n")
    return _replicate(w, [p ** (i * (k + 1)) for i in range(l + 1)])


def double_to_half(w: PartitionWitness) -> PartitionWitness:
    """Half-Zumkeller witness for 2n from a Zumkeller witness for n.

    For each divisor 2^(k+1)*l of 2n that is new (2^k exactly divides n,
    l odd dividing n), move 2^k*l to the other part and add 2^(k+1)*l to
    the part it came from; both parts gain 2^k*l."""
    if w.kind != "zumkeller" or not verify_witness(w):
        raise DomainError("double_to_half needs a valid zumkeller witness")
    n = w.n
    part_a, part_b = set(w.part_a), set(w.part_b)
    k = 0
    m = n
    while m % 2 == 0:
        k += 1
        m //= 2
    odd_divisors = [d for d in divisors(factorize(m)).divisors]
    for l_odd in odd_divisors:
        new = (1 << (k + 1)) * l_odd
        if new == 2 * n:
            continue
        old = (1 << k) * l_odd
        if old in part_a:
            part_a.remove(old)
            part_b.add(old)
            part_a.add(new)
        else:
            part_b.remove(old)
            part_a.add(old)
            part_b.add(new)
    return _checked(PartitionWitness(2 * n, tuple(sorted(part_a)),
                                     tuple(sorted(part_b)), "half_zumkeller"))


def factorial_witness(n: int) -> PartitionWitness:
    """Zumkeller witness for n! via the signed-chain partition; the
    divisor chain of a factorial never more than doubles step to step."""
    if not 3 <= n <= 20:
        raise DomainError(f"supported range is 3 <= n <= 20, got {n}")
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    try:
        d = divisors(factorize(fact))
    except SigmaRangeError as exc:
        raise CapacityError(f"sigma({n}!) leaves the 64-bit range") from exc
    if d.sigma % 2:
        raise AssertionError(f"sigma({n}!) unexpectedly odd")
    w = chain_sign_partition(d)
    if w is None:
        raise CapacityError(f"chain condition failed for {n}! divisors")
    return _checked(w)
