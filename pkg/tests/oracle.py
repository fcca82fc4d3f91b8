"""Independent brute-force oracles used to cross-check the library.

Everything here recomputes from first principles: divisors by trial
division, partitions by recursive subset search with suffix-sum pruning.
No imports from the package under test.
"""

from __future__ import annotations


def brute_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _subset_hits(values: list[int], target: int) -> bool:
    """Exhaustive include/exclude recursion over values (descending),
    pruned only by suffix sums and target bounds."""
    suffix = [0] * (len(values) + 1)
    for i in range(len(values) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + values[i]

    def rec(i: int, rem: int) -> bool:
        if rem == 0:
            return True
        if i == len(values) or rem < 0 or rem > suffix[i]:
            return False
        return rec(i + 1, rem - values[i]) or rec(i + 1, rem)

    return rec(0, target)


def oracle_zumkeller(n: int) -> bool:
    divs = brute_divisors(n)
    total = sum(divs)
    if total % 2:
        return False
    return _subset_hits(sorted(divs, reverse=True), total // 2)


def oracle_half_zumkeller(n: int) -> bool:
    if n == 1:
        return False
    proper = brute_divisors(n)[:-1]
    total = sum(proper)
    if total % 2:
        return False
    return _subset_hits(sorted(proper, reverse=True), total // 2)


def oracle_practical(n: int) -> bool:
    """Every m <= n is a sum of distinct divisors."""
    divs = sorted(brute_divisors(n), reverse=True)
    return all(_subset_hits(divs, m) for m in range(1, n + 1))


def oracle_separating_partition(n: int) -> bool:
    """Even n: some equal-sum partition of all divisors puts n and n/2
    in different parts."""
    divs = brute_divisors(n)
    total = sum(divs)
    if total % 2 or n % 2:
        return False
    rest = sorted((d for d in divs if d not in (n, n // 2)), reverse=True)
    # fix n in part_a; need the rest of part_a to reach total/2 - n
    return _subset_hits(rest, total // 2 - n)
