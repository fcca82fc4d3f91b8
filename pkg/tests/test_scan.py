import pytest

from oracle import oracle_zumkeller
from zumkeller.arith import divisors, factorize
from zumkeller.errors import DomainError
from zumkeller.partition import find_zumkeller_witness, verify_witness
from zumkeller.scan import (
    density_report,
    scan_range,
    survey_range,
    verify_conjecture2,
)


def test_scan_goldens():
    assert scan_range("zumkeller", 1, 40).matches == (6, 12, 20, 24, 28, 30, 40)
    assert scan_range("zumkeller", 1, 5).matches == ()
    assert scan_range("odd_zumkeller", 1, 1000).matches == (945,)


def test_scan_rejects_bad_input():
    with pytest.raises(DomainError):
        scan_range("nope", 1, 10)
    with pytest.raises(DomainError):
        scan_range("zumkeller", 10, 1)


def test_scan_deterministic_across_workers():
    base = scan_range("zumkeller", 1, 20000, workers=1, chunk=512)
    for workers in (4, 16):
        rep = scan_range("zumkeller", 1, 20000, workers=workers, chunk=512)
        assert rep.matches == base.matches
        assert rep.unknowns == base.unknowns


def test_scan_matches_are_a_prefix_of_larger_scans():
    small = scan_range("zumkeller", 1, 500).matches
    large = scan_range("zumkeller", 1, 1500).matches
    assert large[: len(small)] == small


def test_scan_agrees_with_oracle_small():
    got = scan_range("zumkeller", 1, 300).matches
    expected = tuple(n for n in range(1, 301) if oracle_zumkeller(n))
    assert got == expected


def test_scan_matches_carry_verifiable_witnesses():
    rep = scan_range("zumkeller", 1, 2000)
    for n in rep.matches[::20]:  # sample
        w = find_zumkeller_witness(divisors(factorize(n)))
        assert w is not None and verify_witness(w)


def test_conjecture2_small_ranges():
    counterexamples, unknowns = verify_conjecture2(10**4)
    assert counterexamples == [] and unknowns == []
    with pytest.raises(DomainError):
        verify_conjecture2(10**9)


def test_even_zumkeller_up_to_100_are_half():
    rep = survey_range(1, 100)
    assert rep.conjecture2_counterexamples == []
    assert 96 in scan_range("half_zumkeller", 1, 100).matches


def test_survey_counts_match_scan_counts():
    rep = survey_range(1, 3000)
    assert rep.zumkeller_count == len(scan_range("zumkeller", 1, 3000).matches)
    assert rep.half_count == len(scan_range("half_zumkeller", 1, 3000).matches)
    assert rep.abundant_count == len(scan_range("abundant", 1, 3000).matches)
    assert rep.odd_zumkeller == [n for n in scan_range("odd_zumkeller", 1, 3000).matches]


def test_density_report_shape_and_sanity():
    rep = density_report(4000, 1000)
    assert len(rep["buckets"]) == 4
    assert rep["buckets"][0]["from"] == 1 and rep["buckets"][-1]["to"] == 4000
    cum = rep["cumulative"]
    assert 0 < cum["zumkeller"] <= cum["abundant"] + 2 / 4000  # 6 and 28 are perfect
    assert sum(b["zumkeller"] for b in rep["buckets"]) == pytest.approx(
        cum["zumkeller"] * 4000)
    assert rep["unknowns"] == []


def test_zumkeller_count_first_forty():
    rep = density_report(40, 40)
    assert rep["buckets"][0]["zumkeller"] == 7
