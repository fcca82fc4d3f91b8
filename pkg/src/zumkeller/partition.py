"""Subset-sum engines over divisor sets and partition-witness production.

Engine cascade for witness search:
  1. greedy signed chain (when consecutive divisors satisfy a[i+1] <= 2*a[i])
  2. bitset dynamic programming (complete while target <= bitset_target_cap)
  3. meet-in-the-middle (complete while item count <= mitm_max_items)
  4. randomized greedy fill with exact completion over the small tail
     (incomplete: may prove presence, never absence)
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import DivisorSet, divisors, factorize
from .errors import CapacityError, DomainError

DEFAULT_SEED = 0xC0FFEE


@dataclass(frozen=True)
class SearchConfig:
    bitset_target_cap: int = 1 << 26
    mitm_max_items: int = 44
    restarts: int = 64
    seed: int = DEFAULT_SEED
    max_divisors: int = 1 << 20


DEFAULT_CONFIG = SearchConfig()


@dataclass(frozen=True)
class PartitionWitness:
    """Two disjoint divisor subsets with equal sums; the status certificate."""

    n: int
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    kind: str  # "zumkeller" | "half_zumkeller"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "part_a": sorted(self.part_a),
            "part_b": sorted(self.part_b),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "PartitionWitness":
        try:
            return cls(
                n=int(obj["n"]),
                part_a=tuple(int(x) for x in obj["part_a"]),
                part_b=tuple(int(x) for x in obj["part_b"]),
                kind=str(obj["kind"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed witness object: {exc}") from exc


@dataclass(frozen=True)
class SignedChain:
    """Sign assignment over a divisor chain, top down, with running sums."""

    divisors: tuple[int, ...]
    signs: tuple[int, ...]
    running_sums: tuple[int, ...]


def reachable_sums_mask(values, cap: int | None = None) -> int:
    """Bitmask of subset sums; bit i set iff some subset sums to i."""
    mask = 1
    if cap is None:
        for v in values:
            mask |= mask << v
    else:
        keep = (1 << (cap + 1)) - 1
        for v in values:
            if v <= cap:
                mask = (mask | (mask << v)) & keep
    return mask


def _bitset_subset(values, target: int):
    """Complete DP with block-checkpointed masks for witness reconstruction."""
    if target == 0:
        return []
    keep = (1 << (target + 1)) - 1
    # cap transient memory: block * (target bits) stays around 2^29 bits
    block = max(8, min(64, (1 << 29) // max(target, 1)))
    checkpoints = [1]
    mask = 1
    for i, v in enumerate(values):
        if v <= target:
            mask = (mask | (mask << v)) & keep
        if (i + 1) % block == 0:
            checkpoints.append(mask)
    if not (mask >> target) & 1:
        return None
    chosen = []
    t = target
    top = len(values)
    while top > 0:
        blk = (top - 1) // block
        base = blk * block
        pm = [checkpoints[blk]]
        for v in values[base : top - 1]:
            m = pm[-1]
            if v <= target:
                m = (m | (m << v)) & keep
            pm.append(m)
        for i in range(top - 1, base - 1, -1):
            if (pm[i - base] >> t) & 1:
                continue  # reachable without values[i]
            chosen.append(values[i])
            t -= values[i]
        top = base
    assert t == 0
    return chosen


def _mitm_sums(values):
    sums = {0: 0}
    for i, v in enumerate(values):
        bit = 1 << i
        sums.update({s + v: m | bit for s, m in list(sums.items()) if s + v not in sums})
    return sums


def _mitm_subset(values, target: int):
    """Complete meet-in-the-middle search, deduplicated by sum."""
    half = len(values) // 2
    left, right = values[:half], values[half:]
    lsums = _mitm_sums(left)
    rsums = _mitm_sums(right)
    for s, lmask in lsums.items():
        rmask = rsums.get(target - s)
        if rmask is not None:
            subset = [left[i] for i in range(len(left)) if (lmask >> i) & 1]
            subset += [right[i] for i in range(len(right)) if (rmask >> i) & 1]
            return subset
    return None


def _greedy_randomized_subset(values, target: int, config: SearchConfig):
    """Incomplete engine: greedy descending fill over the large values,
    exact bitset completion over a small tail. Deterministic first pass,
    then seeded randomized restarts."""
    desc = sorted(values, reverse=True)
    tail_budget = 1 << 20
    small = []
    ssum = 0
    for v in reversed(desc):
        if ssum + v > tail_budget:
            break
        small.append(v)
        ssum += v
    big = desc[: len(desc) - len(small)]
    small_mask = reachable_sums_mask(small, cap=ssum)

    def attempt(rng):
        rem = target
        picked = []
        for v in big:
            if v <= rem and (rng is None or rng.random() >= 0.15):
                rem -= v
                picked.append(v)
        if rem <= ssum and (small_mask >> rem) & 1:
            tail = _bitset_subset(small, rem)
            return picked + tail
        return None

    found = attempt(None)
    if found is not None:
        return found
    base = hash((config.seed, target, len(values)))
    for i in range(config.restarts):
        found = attempt(random.Random(base + i))
        if found is not None:
            return found
    return None


def subset_with_sum(values, target: int, excluded=frozenset(),
                    config: SearchConfig = DEFAULT_CONFIG):
    """A subset of (values minus excluded) summing to target, or None.

    None is only returned when a complete engine was in regime; otherwise
    a CapacityError distinguishes "could not decide" from "no subset".
    """
    avail = sorted(v for v in values if v not in excluded)
    if target < 0:
        return None
    if target == 0:
        return []
    if target > sum(avail):
        return None
    if target <= config.bitset_target_cap:
        return _bitset_subset(avail, target)
    if len(avail) <= config.mitm_max_items:
        return _mitm_subset(avail, target)
    found = _greedy_randomized_subset(avail, target, config)
    if found is None:
        raise CapacityError(
            f"target {target} above bitset cap {config.bitset_target_cap}, "
            f"{len(avail)} items above meet-in-the-middle cap "
            f"{config.mitm_max_items}, randomized search exhausted"
        )
    return found


def subset_sum_decision(values, target: int, excluded=frozenset(),
                        config: SearchConfig = DEFAULT_CONFIG) -> bool:
    """Decision form of subset_with_sum (no witness reconstruction)."""
    avail = [v for v in values if v not in excluded]
    if target < 0:
        return False
    if target == 0:
        return True
    total = sum(avail)
    if target > total:
        return False
    # cheap greedy pre-pass: a hit proves presence without the DP
    rem = target
    for v in sorted(avail, reverse=True):
        if v <= rem:
            rem -= v
            if rem == 0:
                return True
    if target <= config.bitset_target_cap:
        return bool((reachable_sums_mask(avail, cap=target) >> target) & 1)
    if len(avail) <= config.mitm_max_items:
        return _mitm_subset(sorted(avail), target) is not None
    if _greedy_randomized_subset(sorted(avail), target, config) is not None:
        return True
    raise CapacityError(f"subset-sum decision for target {target} out of regime")


def chain_condition_holds(d: DivisorSet) -> bool:
    divs = d.divisors
    return all(divs[i + 1] <= 2 * divs[i] for i in range(len(divs) - 1))


def build_signed_chain(d: DivisorSet) -> SignedChain | None:
    """Top-down opposite-sign assignment; None unless the chain condition
    holds and sigma is even (the pair that forces the final sum to zero)."""
    if d.sigma % 2 or not chain_condition_holds(d):
        return None
    divs = d.divisors
    signs = [0] * len(divs)
    sums = [0] * len(divs)
    s = 0
    for i in range(len(divs) - 1, -1, -1):
        sign = 1 if i == len(divs) - 1 else (-1 if s >= 0 else 1)
        signs[i] = sign
        s += sign * divs[i]
        sums[i] = s
        assert abs(s) <= divs[i], "chain loop invariant |s_i| <= a_i violated"
    if s != 0:
        return None
    return SignedChain(divs, tuple(signs), tuple(sums))


def chain_sign_partition(d: DivisorSet) -> PartitionWitness | None:
    chain = build_signed_chain(d)
    if chain is None:
        return None
    part_a = tuple(a for a, s in zip(chain.divisors, chain.signs) if s > 0)
    part_b = tuple(a for a, s in zip(chain.divisors, chain.signs) if s < 0)
    return PartitionWitness(d.n, part_a, part_b, "zumkeller")


def verify_witness(w: PartitionWitness) -> bool:
    """Certificate check: recompute divisors and sums from scratch."""
    try:
        d = divisors(factorize(w.n))
    except (DomainError, CapacityError):
        return False
    a, b = set(w.part_a), set(w.part_b)
    if len(a) != len(w.part_a) or len(b) != len(w.part_b) or a & b:
        return False
    if w.kind == "zumkeller":
        expected = set(d.divisors)
        total = d.sigma
    elif w.kind == "half_zumkeller":
        expected = set(d.divisors) - {w.n}
        total = d.sigma - w.n
    else:
        return False
    if (a | b) != expected or total % 2:
        return False
    return sum(a) == sum(b) == total // 2


def _half_from_zumkeller_parts(n: int, part_with_n, other_part) -> PartitionWitness:
    """Zumkeller partition separating n and n/2 -> half witness:
    drop n, move n/2 into the part that held n."""
    half = n // 2
    part_a = tuple(x for x in part_with_n if x != n) + (half,)
    part_b = tuple(x for x in other_part if x != half)
    return PartitionWitness(n, part_a, part_b, "half_zumkeller")


def find_zumkeller_witness(d: DivisorSet,
                           config: SearchConfig = DEFAULT_CONFIG) -> PartitionWitness | None:
    n, s = d.n, d.sigma
    if s % 2 or s < 2 * n:
        return None
    w = chain_sign_partition(d)
    if w is not None:
        return w
    subset = subset_with_sum(d.divisors, (s - 2 * n) // 2, excluded={n}, config=config)
    if subset is None:
        return None
    part_a = tuple(sorted([n] + subset))
    rest = set(d.divisors) - set(part_a)
    return PartitionWitness(n, part_a, tuple(sorted(rest)), "zumkeller")


def find_half_zumkeller_witness(d: DivisorSet,
                                config: SearchConfig = DEFAULT_CONFIG) -> PartitionWitness | None:
    n, s = d.n, d.sigma
    if n == 1:
        return None
    if n % 2:
        # odd half-Zumkeller numbers are perfect squares (sigma must be odd)
        if s % 2 == 0:
            return None
        subset = subset_with_sum(d.proper, (s - n) // 2, config=config)
        if subset is None:
            return None
        part_a = tuple(sorted(subset))
        rest = set(d.proper) - set(part_a)
        return PartitionWitness(n, part_a, tuple(sorted(rest)), "half_zumkeller")
    if s % 2 or s < 2 * n:
        return None
    w = chain_sign_partition(d)
    if w is not None:
        # the chain rule gives n and n/2 opposite signs (adjacent at the top)
        if n in w.part_a:
            return _half_from_zumkeller_parts(n, w.part_a, w.part_b)
        return _half_from_zumkeller_parts(n, w.part_b, w.part_a)
    subset = subset_with_sum(d.divisors, (s - 2 * n) // 2,
                             excluded={n, n // 2}, config=config)
    if subset is None:
        return None
    part_a = tuple(sorted([n // 2] + subset))
    rest = set(d.proper) - set(part_a)
    return PartitionWitness(n, part_a, tuple(sorted(rest)), "half_zumkeller")
