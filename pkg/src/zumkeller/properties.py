"""Named property sweeps: each check brute-forces one structural claim
over a bounded range and reports counterexamples. Shared by the CLI
`verify` subcommand and the test suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import divisors, factorize, factorize_range, prime_sieve, sigma
from .classify import is_practical, sigma_reachability_check
from .errors import CapacityError
from .partition import DEFAULT_CONFIG, SearchConfig, subset_sum_decision
from .theory import (
    CounterexampleCandidate,
    DigitBounds,
    digit_conditions_hold,
    digit_decompose,
    multiplyz_equivalence,
    znoth_prefilter,
)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    checked: int
    counterexamples: list = field(default_factory=list)
    unknowns: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "property": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples[:50],
            "unknowns": self.unknowns[:50],
            "details": self.details,
        }


def search_zumkeller(f, config: SearchConfig = DEFAULT_CONFIG) -> bool:
    """Pure search decision, bypassing every classification shortcut:
    sigma even and (sigma-2n)/2 a subset sum of divisors without n."""
    d = divisors(f, cap=config.max_divisors)
    if d.sigma % 2:
        return False
    return subset_sum_decision(d.divisors, (d.sigma - 2 * f.n) // 2,
                               excluded={f.n}, config=config)


def search_half_zumkeller(f, config: SearchConfig = DEFAULT_CONFIG) -> bool:
    """Pure search decision over proper divisors, no shortcuts.
    1 has no proper divisors to split and counts as no."""
    if f.n == 1:
        return False
    d = divisors(f, cap=config.max_divisors)
    if (d.sigma - f.n) % 2:
        return False
    return subset_sum_decision(d.proper, (d.sigma - f.n) // 2, config=config)


def check_conjecture2(to: int | None, workers: int,
                      config: SearchConfig) -> PropertyResult:
    """No even Zumkeller number up to the bound fails to be half-Zumkeller."""
    from .scan import CONJECTURE2_DESK_CAP, verify_conjecture2

    bound = to or CONJECTURE2_DESK_CAP
    counterexamples, unknowns = verify_conjecture2(bound, workers=workers,
                                                   config=config)
    return PropertyResult("conjecture2", not counterexamples and not unknowns,
                          bound, counterexamples, unknowns)


def check_lemma1(to: int | None, workers: int,
                 config: SearchConfig) -> PropertyResult:
    """Digit-cap conditions hold exactly when every value in range is
    representable, and the greedy decomposition succeeds whenever they do.
    Swept over p in {2,3,5}, up to four digits, caps up to 4."""
    bad = []
    checked = 0
    for p in (2, 3, 5):
        for length in range(1, 5):
            for caps in _cap_tuples(length, 4):
                b = DigitBounds(p, caps)
                reachable = _brute_reachable(b)
                all_hit = all(m in reachable for m in range(b.max_value + 1))
                if digit_conditions_hold(b) != all_hit:
                    bad.append({"p": p, "caps": caps, "conditions": not all_hit})
                if digit_conditions_hold(b):
                    for m in range(b.max_value + 1):
                        out = digit_decompose(m, b)
                        if out is None or sum(c * p**i for i, c in enumerate(out)) != m:
                            bad.append({"p": p, "caps": caps, "M": m})
                checked += 1
    return PropertyResult("lemma1", not bad, checked, bad)


def _cap_tuples(length: int, cap: int):
    if length == 0:
        yield ()
        return
    for head in _cap_tuples(length - 1, cap):
        for a in range(cap + 1):
            yield head + (a,)


def _brute_reachable(b: DigitBounds) -> set[int]:
    sums = {0}
    for i, a in enumerate(b.caps):
        sums = {s + c * b.p**i for s in sums for c in range(a + 1)}
    return sums


def check_multiplyz(to: int | None, workers: int,
                    config: SearchConfig) -> PropertyResult:
    """The four Zumkeller conditions for n*p agree, for every n up to the
    bound with at most 12 divisors and p in {3,5,7,11,13} coprime to n."""
    bound = to or 200
    bad = []
    checked = 0
    for n in range(1, bound + 1):
        f = factorize(n)
        if len(divisors(f).divisors) > 12:
            continue
        for p in (3, 5, 7, 11, 13):
            if n % p == 0:
                continue
            report = multiplyz_equivalence(n, p)
            checked += 1
            if len(set(report)) != 1:
                bad.append({"n": n, "p": p, "conditions": list(report)})
    return PropertyResult("multiplyz", not bad, checked, bad)


def check_practical(to: int | None, workers: int,
                    config: SearchConfig) -> PropertyResult:
    """Stewart growth test matches full sigma-reachability, and for
    practical n both Zumkeller and half-Zumkeller hold exactly when
    sigma(n) is even (decided by raw search, no shortcuts)."""
    bound = to or 10**5
    bad = []
    checked = 0
    step = 1 << 14
    for lo in range(1, bound + 1, step):
        for f in factorize_range(lo, min(lo + step - 1, bound)):
            checked += 1
            practical = is_practical(f)
            if practical != sigma_reachability_check(f):
                bad.append({"n": f.n, "stewart": practical})
                continue
            if practical:
                even = sigma(f) % 2 == 0
                if search_zumkeller(f, config) != even:
                    bad.append({"n": f.n, "claim": "zumkeller_iff_sigma_even"})
                if search_half_zumkeller(f, config) != even:
                    bad.append({"n": f.n, "claim": "half_iff_sigma_even"})
    return PropertyResult("practical", not bad, checked, bad)


def check_theorem_np(to: int | None, workers: int,
                     config: SearchConfig) -> PropertyResult:
    """Closed-form predictions for n*p^l (n practical) match raw search,
    for n up to the bound, coprime primes p <= 50, l <= 3."""
    from .theory import practical_times_prime_power

    bound = to or 500
    bad = []
    checked = 0
    primes = [p for p in prime_sieve(50)]
    for n in range(1, bound + 1):
        f = factorize(n)
        if not is_practical(f):
            continue
        for p in primes:
            if gcd(n, p) != 1:
                continue
            for l in (1, 2, 3):
                pred = practical_times_prime_power(f, p, l)
                g = factorize(n * p**l)
                checked += 1
                if search_zumkeller(g, config) != pred.zumkeller:
                    bad.append({"n": n, "p": p, "l": l, "claim": "zumkeller"})
                if search_half_zumkeller(g, config) != pred.half_zumkeller:
                    bad.append({"n": n, "p": p, "l": l, "claim": "half_zumkeller"})
    return PropertyResult("theorem_np", not bad, checked, bad)


def check_nonzumkeller_base(to: int | None, workers: int,
                            config: SearchConfig) -> PropertyResult:
    """When n is not Zumkeller but n*p^l is (p coprime, l <= 2, p <= 30),
    p never exceeds sigma(n), and l is odd whenever sigma(n) is odd."""
    bound = to or 300
    bad = []
    checked = 0
    for n in range(1, bound + 1):
        f = factorize(n)
        if search_zumkeller(f, config):
            continue
        s = sigma(f)
        for p in prime_sieve(30):
            if gcd(n, p) != 1:
                continue
            for l in (1, 2):
                if not search_zumkeller(factorize(n * p**l), config):
                    continue
                checked += 1
                if p > s:
                    bad.append({"n": n, "p": p, "l": l, "claim": "p_le_sigma"})
                if s % 2 and l % 2 == 0:
                    bad.append({"n": n, "p": p, "l": l, "claim": "l_odd"})
    return PropertyResult("nonzumkeller_base", not bad, checked, bad)


def check_znoth_goldens(to: int | None, workers: int,
                        config: SearchConfig) -> PropertyResult:
    """Prefix constants and verdicts of the counterexample prefilter on
    its reference inputs, including the 7,202,859,300 candidate."""
    bad = []
    s1 = sigma(factorize(2**2 * 3**2)) + 1
    if s1 != 92:
        bad.append({"constant": "sigma(2^2 3^2)+1", "got": s1})
    s2 = sigma(factorize(2**2 * 3**2 * 5**2)) + 1
    if s2 != 2822:
        bad.append({"constant": "sigma(2^2 3^2 5^2)+1", "got": s2})
    big = 2**2 * 3**2 * 5**2 * 2833 * 2837
    cand = CounterexampleCandidate.from_factorization(factorize(big))
    if cand.j != 3 or not znoth_prefilter(cand):
        bad.append({"n": big, "j": cand.j})
    for n in (720, 360, 96):  # practical, no overshoot anywhere
        if znoth_prefilter(CounterexampleCandidate.from_factorization(factorize(n))):
            bad.append({"n": n, "claim": "practical_must_fail"})
    return PropertyResult("znoth_goldens", not bad, 6, bad)


PROPERTY_CHECKS = {
    "conjecture2": check_conjecture2,
    "lemma1": check_lemma1,
    "multiplyz": check_multiplyz,
    "practical": check_practical,
    "theorem_np": check_theorem_np,
    "nonzumkeller_base": check_nonzumkeller_base,
    "znoth_goldens": check_znoth_goldens,
}


def run_property(name: str, to: int | None = None, workers: int = 1,
                 config: SearchConfig = DEFAULT_CONFIG) -> PropertyResult:
    return PROPERTY_CHECKS[name](to, workers, config)
