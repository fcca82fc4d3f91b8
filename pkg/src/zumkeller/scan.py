"""Range scanning: predicate enumeration, the even-Zumkeller-implies-half
check at desk scale, and density reporting, with deterministic output.

Work is split into fixed-size chunks handed to a process pool; chunk
results are merged in ascending order, so output is identical for any
worker count.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass, field

from .arith import Factorization, factorize_range, sigma
from .classify import NO, UNKNOWN, YES, _half_status, _zumkeller_status, is_practical, is_quasi_practical
from .errors import CapacityError, DomainError
from .partition import DEFAULT_CONFIG, SearchConfig
from .theory import CounterexampleCandidate, znoth_prefilter

DEFAULT_CHUNK = 4096
CONJECTURE2_DESK_CAP = 10**6
CONJECTURE2_HARD_CAP = 10**8

PREDICATES = (
    "zumkeller",
    "half_zumkeller",
    "practical",
    "quasi_practical",
    "odd_zumkeller",
    "abundant",
)


@dataclass(frozen=True)
class ScanReport:
    predicate: str
    start: int
    stop: int
    matches: tuple[int, ...]
    unknowns: tuple[int, ...]
    elapsed: float
    chunk_size: int
    workers: int

    @property
    def total(self) -> int:
        return self.stop - self.start + 1

    def to_json_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "from": self.start,
            "to": self.stop,
            "match_count": len(self.matches),
            "unknown_count": len(self.unknowns),
            "unknowns": list(self.unknowns),
            "elapsed_seconds": round(self.elapsed, 3),
            "chunk_size": self.chunk_size,
            "workers": self.workers,
        }


def _eval_predicate(pred: str, f: Factorization, config: SearchConfig) -> str:
    if pred == "abundant":
        return YES if sigma(f) > 2 * f.n else NO
    if pred == "practical":
        return YES if is_practical(f) else NO
    if pred == "quasi_practical":
        try:
            return YES if is_quasi_practical(f) else NO
        except CapacityError:
            return UNKNOWN
    s = sigma(f)
    if pred == "zumkeller":
        return _zumkeller_status(f, s, config)[0]
    if pred == "odd_zumkeller":
        if f.n % 2 == 0:
            return NO
        return _zumkeller_status(f, s, config)[0]
    if pred == "half_zumkeller":
        zk = _zumkeller_status(f, s, config)[0]
        return _half_status(f, s, zk, config)[0]
    raise DomainError(f"unknown predicate {pred!r}; choose from {PREDICATES}")


def _scan_chunk(args) -> tuple[list[int], list[int]]:
    pred, lo, hi, config = args
    matches, unknowns = [], []
    for f in factorize_range(lo, hi):
        status = _eval_predicate(pred, f, config)
        if status == YES:
            matches.append(f.n)
        elif status == UNKNOWN:
            unknowns.append(f.n)
    return matches, unknowns


def _chunks(start: int, stop: int, chunk: int):
    for lo in range(start, stop + 1, chunk):
        yield lo, min(lo + chunk - 1, stop)


def _run_chunked(worker, args_iter, workers: int):
    """Ordered map over chunk arguments, in-process when workers <= 1."""
    if workers <= 1:
        yield from map(worker, args_iter)
        return
    with multiprocessing.Pool(workers) as pool:
        yield from pool.imap(worker, args_iter, chunksize=1)


def default_workers() -> int:
    return os.cpu_count() or 1


def scan_range(pred: str, start: int, stop: int, workers: int = 1,
               chunk: int = DEFAULT_CHUNK,
               config: SearchConfig = DEFAULT_CONFIG) -> ScanReport:
    if pred not in PREDICATES:
        raise DomainError(f"unknown predicate {pred!r}; choose from {PREDICATES}")
    if not 1 <= start <= stop:
        raise DomainError(f"need 1 <= from <= to, got [{start}, {stop}]")
    t0 = time.perf_counter()
    matches: list[int] = []
    unknowns: list[int] = []
    args = ((pred, lo, hi, config) for lo, hi in _chunks(start, stop, chunk))
    for m, u in _run_chunked(_scan_chunk, args, workers):
        matches += m
        unknowns += u
    return ScanReport(pred, start, stop, tuple(matches), tuple(unknowns),
                      time.perf_counter() - t0, chunk, workers)


@dataclass
class SurveyReport:
    """One-pass range survey: predicate counts per bucket plus the
    consistency checks that ride along for free."""

    start: int
    stop: int
    bucket: int
    abundant_per_bucket: list[int] = field(default_factory=list)
    zumkeller_per_bucket: list[int] = field(default_factory=list)
    half_per_bucket: list[int] = field(default_factory=list)
    conjecture2_counterexamples: list[int] = field(default_factory=list)
    prefilter_violations: list[int] = field(default_factory=list)
    odd_zumkeller: list[int] = field(default_factory=list)
    unknowns: list[int] = field(default_factory=list)
    elapsed: float = 0.0
    workers: int = 1

    @property
    def abundant_count(self) -> int:
        return sum(self.abundant_per_bucket)

    @property
    def zumkeller_count(self) -> int:
        return sum(self.zumkeller_per_bucket)

    @property
    def half_count(self) -> int:
        return sum(self.half_per_bucket)


def _survey_chunk(args):
    lo, hi, config = args
    abundant = zk_count = hz_count = 0
    c2, viol, oddz, unknowns = [], [], [], []
    for f in factorize_range(lo, hi):
        n = f.n
        s = sigma(f)
        if s > 2 * n:
            abundant += 1
        zk, _ = _zumkeller_status(f, s, config)
        hz, hz_tag = _half_status(f, s, zk, config)
        if zk == YES:
            zk_count += 1
            if n % 2:
                oddz.append(n)
        if hz == YES:
            hz_count += 1
        if zk == UNKNOWN or hz == UNKNOWN:
            unknowns.append(n)
        if n % 2 == 0 and zk == YES:
            if hz == NO:
                c2.append(n)
            if hz_tag == "sigma_lt_3n":
                # shortcut requires sigma < 3n, so the prefilter must reject
                cand = CounterexampleCandidate.from_factorization(f)
                if znoth_prefilter(cand):
                    viol.append(n)
    return abundant, zk_count, hz_count, c2, viol, oddz, unknowns


def survey_range(start: int, stop: int, workers: int = 1,
                 bucket: int = DEFAULT_CHUNK,
                 config: SearchConfig = DEFAULT_CONFIG) -> SurveyReport:
    """Single pass over [start, stop] collecting abundance and Zumkeller
    densities, even-Zumkeller-not-half counterexamples, odd Zumkeller
    numbers, and prefilter consistency violations."""
    if not 1 <= start <= stop:
        raise DomainError(f"need 1 <= from <= to, got [{start}, {stop}]")
    t0 = time.perf_counter()
    rep = SurveyReport(start, stop, bucket, workers=workers)
    args = ((lo, hi, config) for lo, hi in _chunks(start, stop, bucket))
    for a, z, h, c2, viol, oddz, unk in _run_chunked(_survey_chunk, args, workers):
        rep.abundant_per_bucket.append(a)
        rep.zumkeller_per_bucket.append(z)
        rep.half_per_bucket.append(h)
        rep.conjecture2_counterexamples += c2
        rep.prefilter_violations += viol
        rep.odd_zumkeller += oddz
        rep.unknowns += unk
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_conjecture2(to: int, workers: int = 1,
                       config: SearchConfig = DEFAULT_CONFIG) -> tuple[list[int], list[int]]:
    """Every even n <= to that is Zumkeller but not half-Zumkeller, plus
    the list of n left undecided. Both lists empty means the conjecture
    holds on the scanned range."""
    if to > CONJECTURE2_HARD_CAP:
        raise DomainError(f"to={to} above hard cap {CONJECTURE2_HARD_CAP}")
    rep = survey_range(1, to, workers=workers, config=config)
    return rep.conjecture2_counterexamples, rep.unknowns


def density_report(to: int, bucket: int, workers: int = 1,
                   config: SearchConfig = DEFAULT_CONFIG) -> dict:
    """Per-bucket counts and cumulative densities of abundant, Zumkeller,
    and half-Zumkeller numbers up to `to`."""
    if not 1 <= bucket <= to:
        raise DomainError(f"need 1 <= bucket <= to, got bucket={bucket}, to={to}")
    rep = survey_range(1, to, workers=workers, bucket=bucket, config=config)
    buckets = []
    seen = 0
    cum_a = cum_z = cum_h = 0
    for i, (a, z, h) in enumerate(zip(rep.abundant_per_bucket,
                                      rep.zumkeller_per_bucket,
                                      rep.half_per_bucket)):
        lo = 1 + i * bucket
        hi = min(lo + bucket - 1, to)
        seen = hi
        cum_a += a
        cum_z += z
        cum_h += h
        buckets.append({
            "from": lo, "to": hi,
            "abundant": a, "zumkeller": z, "half_zumkeller": h,
            "cumulative_density": {
                "abundant": cum_a / seen,
                "zumkeller": cum_z / seen,
                "half_zumkeller": cum_h / seen,
            },
        })
    return {
        "to": to,
        "bucket": bucket,
        "buckets": buckets,
        "cumulative": {
            "abundant": cum_a / to,
            "zumkeller": cum_z / to,
            "half_zumkeller": cum_h / to,
        },
        "unknowns": list(rep.unknowns),
        "elapsed_seconds": round(rep.elapsed, 3),
    }
