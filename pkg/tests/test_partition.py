import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import oracle_separating_partition
from zumkeller.arith import divisors, factorize
from zumkeller.errors import CapacityError, DomainError
from zumkeller.partition import (
    PartitionWitness,
    SearchConfig,
    build_signed_chain,
    chain_sign_partition,
    find_half_zumkeller_witness,
    find_zumkeller_witness,
    subset_with_sum,
    verify_witness,
)


def test_subset_with_sum_goldens():
    d945 = divisors(factorize(945)).divisors
    sub = subset_with_sum(d945, 15, excluded={945})
    assert sub is not None and sum(sub) == 15
    d70 = divisors(factorize(70)).divisors
    sub = subset_with_sum(d70, 2, excluded={70})
    assert sub is not None and sum(sub) == 2
    assert subset_with_sum([1, 2, 4], 8) is None
    assert subset_with_sum([1, 2, 4], 0) == []


def test_subset_with_sum_respects_exclusions():
    sub = subset_with_sum([1, 2, 3, 6], 6, excluded={6})
    assert sub is not None and sum(sub) == 6 and 6 not in sub


@given(st.lists(st.integers(min_value=1, max_value=200), min_size=1, max_size=12,
                unique=True),
       st.integers(min_value=0, max_value=1200))
@settings(max_examples=300, deadline=None)
def test_subset_with_sum_agrees_with_enumeration(values, target):
    reachable = {0}
    for v in values:
        reachable |= {s + v for s in reachable}
    sub = subset_with_sum(sorted(values), target)
    if target in reachable:
        assert sub is not None and sum(sub) == target
        assert len(set(sub)) == len(sub) and set(sub) <= set(values)
    else:
        assert sub is None


def test_chain_goldens():
    w = chain_sign_partition(divisors(factorize(6)))
    assert set(w.part_a) == {6} and set(w.part_b) == {1, 2, 3}
    assert chain_sign_partition(divisors(factorize(70))) is None
    w = chain_sign_partition(divisors(factorize(24)))
    assert sum(w.part_a) == sum(w.part_b) == 30


def test_chain_running_sums_bounded():
    for n in (6, 24, 120, 720, 5040):
        chain = build_signed_chain(divisors(factorize(n)))
        assert chain is not None
        assert chain.running_sums[0] == 0
        for a, s in zip(chain.divisors, chain.running_sums):
            assert abs(s) <= a


def test_verify_witness_goldens():
    good = PartitionWitness(225, (75, 9, 5), (45, 25, 15, 3, 1), "half_zumkeller")
    assert verify_witness(good)
    assert verify_witness(PartitionWitness(6, (6,), (1, 2, 3), "zumkeller"))
    bad_nondivisor = PartitionWitness(225, (75, 9, 5, 8), (45, 25, 15, 3, 1),
                                      "half_zumkeller")
    assert not verify_witness(bad_nondivisor)
    assert not verify_witness(PartitionWitness(6, (6, 3), (1, 2), "zumkeller"))
    assert not verify_witness(PartitionWitness(6, (6,), (1, 2, 3), "nonsense"))


def test_find_zumkeller_witness_goldens():
    w = find_zumkeller_witness(divisors(factorize(6)))
    assert w is not None and verify_witness(w)
    w = find_zumkeller_witness(divisors(factorize(945)))
    assert w is not None and verify_witness(w) and 945 in w.part_a
    assert find_zumkeller_witness(divisors(factorize(9))) is None


def test_find_half_witness_goldens():
    for n in (70, 350, 490, 225):
        w = find_half_zumkeller_witness(divisors(factorize(n)))
        assert w is not None and verify_witness(w), n
    assert find_half_zumkeller_witness(divisors(factorize(1575))) is None
    assert find_half_zumkeller_witness(divisors(factorize(1))) is None


def test_even_half_witness_implies_zumkeller_witness():
    for n in range(2, 2001, 2):
        d = divisors(factorize(n))
        if find_half_zumkeller_witness(d) is not None:
            assert find_zumkeller_witness(d) is not None, n


def test_even_half_iff_separating_partition():
    # cross-check against exhaustive search for a partition that puts
    # n and n/2 on different sides
    for n in range(2, 2001, 2):
        d = divisors(factorize(n))
        ours = find_half_zumkeller_witness(d) is not None
        assert ours == oracle_separating_partition(n), n


def test_every_witness_verifies_on_sample():
    for n in range(2, 500):
        d = divisors(factorize(n))
        for finder in (find_zumkeller_witness, find_half_zumkeller_witness):
            w = finder(d)
            if w is not None:
                assert verify_witness(w), (n, w.kind)


def test_witness_json_roundtrip():
    w = find_zumkeller_witness(divisors(factorize(945)))
    blob = json.dumps(w.to_json_dict())
    back = PartitionWitness.from_json_dict(json.loads(blob))
    assert verify_witness(back)
    assert sorted(back.part_a) == list(back.part_a)  # arrays sorted on emit
    with pytest.raises(DomainError):
        PartitionWitness.from_json_dict({"n": 6})


def test_capacity_error_distinct_from_absent():
    # target above the bitset cap, too many items for meet-in-the-middle,
    # and values too coarse for the greedy engine to land exactly
    cfg = SearchConfig(bitset_target_cap=100, mitm_max_items=4, restarts=8)
    values = [2**i for i in range(5, 70)]
    with pytest.raises(CapacityError):
        subset_with_sum(values, 131, config=cfg)


def test_randomized_engine_presence_only():
    # in-regime engines still answer absent without raising
    cfg = SearchConfig(bitset_target_cap=1 << 26)
    assert subset_with_sum([2, 4, 8], 5, config=cfg) is None
