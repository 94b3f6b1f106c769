import pytest

from pisano.classify import (
    classify_by_factors,
    format_bfile,
    oeis_sequence,
    omega_lcm_table,
    order_of,
    rank_order_correspondence,
    verify_oeis_conjectures,
)
from pisano.periods import profile_fast, profile_oracle
from pisano.seq import RecurrenceParams

# OEIS split of [1, 181] by zero count (classic sequence).
ORDER_1 = [1, 2, 4, 11, 19, 22, 29, 31, 38, 44, 58, 59, 62, 71, 76, 79,
           101, 116, 118, 121, 124, 131, 139, 142, 151, 158, 179, 181]
ORDER_4 = [5, 10, 13, 17, 25, 26, 34, 37, 50, 53, 61, 65, 73, 74, 85, 89,
           97, 106, 109, 113, 122, 125, 130, 137, 146, 149, 157]
ORDER_2_PREFIX = [3, 6, 7, 8, 9, 12, 14, 15, 16, 18, 20, 21, 23, 24, 27, 28,
                  30, 32, 33, 35, 36, 39, 40, 41, 42, 43, 45, 46, 47, 48, 49]


def test_classify_examples():
    assert classify_by_factors(10, 1) == 4
    assert classify_by_factors(8, 1) == 2
    assert classify_by_factors(19, 1) == 1
    assert classify_by_factors(3, 1) == 2
    assert classify_by_factors(1, 1) == 1
    with pytest.raises(ValueError):
        classify_by_factors(6, 2)
    with pytest.raises(ValueError):
        classify_by_factors(0, 1)


def test_classify_matches_oracle():
    for m in range(1, 2001):
        assert classify_by_factors(m, 1) == profile_oracle(RecurrenceParams(1, 1), m).order
    for k in (3, 5):
        for m in range(1, 501):
            assert classify_by_factors(m, k) == profile_oracle(RecurrenceParams(k, 1), m).order
    for k in (2, 4):
        for m in range(1, 1001, 2):
            assert classify_by_factors(m, k) == profile_oracle(RecurrenceParams(k, 1), m).order


def test_omega_lcm_table():
    assert omega_lcm_table(1, 2, 5) == frozenset({4})
    assert omega_lcm_table(1, 4, 5) == frozenset({2})
    assert omega_lcm_table(1, 3, 7) == frozenset({2})
    assert omega_lcm_table(2, 8, 10) == frozenset({1, 2})
    assert order_of(2, 40) == 1
    # cell predictions always contain the actual order
    for k in range(1, 5):
        for m in range(2, 61):
            for n in range(2, 61):
                from math import lcm
                assert order_of(k, lcm(m, n)) in omega_lcm_table(k, m, n)


def test_rank_order_correspondence():
    assert rank_order_correspondence(5, 1) == (1, 4)
    assert rank_order_correspondence(19, 1) == (2, 1)
    assert rank_order_correspondence(7, 1) == (0, 2)
    with pytest.raises(ValueError):
        rank_order_correspondence(2, 1)
    with pytest.raises(ValueError):
        rank_order_correspondence(9, 1)


def test_oeis_sequences():
    assert oeis_sequence("A053031", 181) == ORDER_1
    assert oeis_sequence("A053029", 157) == ORDER_4
    assert oeis_sequence("A053030", 49) == ORDER_2_PREFIX
    assert oeis_sequence("A053029", 40)[:8] == [5, 10, 13, 17, 25, 26, 34, 37]
    with pytest.raises(ValueError):
        oeis_sequence("A000045", 100)


def test_oeis_partition():
    limit = 300
    union = sorted(
        oeis_sequence("A053029", limit)
        + oeis_sequence("A053030", limit)
        + oeis_sequence("A053031", limit)
    )
    assert union == list(range(1, limit + 1))


def test_bfile_format():
    assert format_bfile([5, 10, 13]) == "1 5\n2 10\n3 13\n"
    assert format_bfile([]) == ""


def test_order_restatements():
    # order 1 <=> 4 does not divide the period; order 2 <=> 4 | period and rank even
    def check(k, m):
        prof = profile_fast(RecurrenceParams(k, 1), m)
        assert (prof.order == 1) == (prof.period % 4 != 0)
        assert (prof.order == 2) == (prof.period % 4 == 0 and prof.rank % 2 == 0)

    for m in range(2, 5001):
        check(1, m)
    for k in (3, 5, 7, 9):
        for m in range(2, 2001):
            check(k, m)
    for k in (2, 4, 6, 8):
        for m in range(2, 2001):
            if m % 4 != 0:
                check(k, m)


def test_oeis_conjecture_sweep():
    report = verify_oeis_conjectures(200)
    assert report.status == "pass"
    assert report.counterexamples == []
    with pytest.raises(ValueError):
        verify_oeis_conjectures(3)
