import pytest

from pisano.lab import (
    carmichael_check,
    degenerate_case_table,
    order_census,
    verify_even_k_exceptions,
    verify_finite_orders_conjecture,
    verify_identities,
    verify_lcm_tables,
    verify_main_theorem,
    verify_negativemult,
    verify_powers_of_two,
    verify_wyler,
    wall_sun_sun_primes,
    williams_check,
)
from pisano.periods import profile_oracle
from pisano.seq import RecurrenceParams

DEGENERATE_PAIRS = [
    (1, -1), (-1, -1), (2, -1), (-2, -1), (0, -1), (0, 1), (1, 0), (-1, 0),
]


def test_degenerate_table_matches_oracle():
    for a, b in DEGENERATE_PAIRS:
        for m in range(2, 1001):
            expected = profile_oracle(RecurrenceParams(a, b), m).order
            assert degenerate_case_table(a, b, m) == expected, (a, b, m)


def test_degenerate_table_errors():
    with pytest.raises(ValueError):
        degenerate_case_table(1, 1, 10)
    with pytest.raises(ValueError):
        degenerate_case_table(1, -1, 1)


def test_negativemult_table():
    # the conjectured table holds for |a| = 3 on this window
    assert verify_negativemult(3, 150).passed
    # ...but fails for |a| = 4: order of 2 is 1 there, order of 5 is 2,
    # yet the order of 10 is 1, contradicting the 'any 2 -> 2' cell
    report = verify_negativemult(4, 60)
    assert report.status == "fail"
    assert sorted({c.inputs["a"] for c in report.counterexamples}) == [-4, 4]
    assert all(
        c.inputs["m"] % 2 == 0 or c.inputs["n"] % 2 == 0
        for c in report.counterexamples
    )


def test_order_census_examples():
    report = order_census(3, 5, 99)
    assert len(report.census) == 20
    assert report.census[1]["first"] == 2
    report = order_census(1, 1, 100)
    assert set(report.census) == {1, 2, 4}
    with pytest.raises(ValueError):
        order_census(1, 1, 10**6)


def test_order_census_parallel_agrees():
    serial = order_census(2, 3, 500, jobs=1)
    parallel = order_census(2, 3, 500, jobs=2)
    assert serial.census == parallel.census


def test_finite_orders_cases_iii_iv_pass():
    for case in ("iii", "iv"):
        report = verify_finite_orders_conjecture(case, m_max=120)
        assert report.passed, (case, report.counterexamples[:3])


def test_finite_orders_case_v_holds_iff_square_discriminant():
    # The claimed {0, 1, 2} range for |a| - |b| = 1, b != +-1 holds only
    # when a**2 + 4b is a perfect square (integer characteristic roots);
    # e.g. (3, 2) reaches order 4 at m = 5.  Every reported counterexample
    # must come from a non-square-discriminant pair, and at least one such
    # pair must be caught.
    from math import isqrt

    report = verify_finite_orders_conjecture("v", m_max=120)
    assert report.status == "fail"
    bad_pairs = {(c.inputs["a"], c.inputs["b"]) for c in report.counterexamples}
    assert (3, 2) in bad_pairs
    for a, b in bad_pairs:
        disc = a * a + 4 * b
        assert disc < 0 or isqrt(disc) ** 2 != disc, (a, b)


def test_finite_orders_cases_i_ii_have_known_counterexamples():
    # The claimed always-order-1 list is wrong for (1, 0), (-1, 0) (their
    # cycles are zero-free, order 0) and for (-2, -1) at odd moduli
    # (order 2).  The sweep must report these honestly.
    report_i = verify_finite_orders_conjecture("i", m_max=60)
    assert report_i.status == "fail"
    pairs_i = {(c.inputs["a"], c.inputs["b"]) for c in report_i.counterexamples}
    assert pairs_i == {(1, 0), (-2, -1), (-1, 0)}

    report_ii = verify_finite_orders_conjecture("ii", m_max=60)
    assert report_ii.status == "fail"
    pairs_ii = {(c.inputs["a"], c.inputs["b"]) for c in report_ii.counterexamples}
    assert pairs_ii == {(-1, 0)}

    with pytest.raises(ValueError):
        verify_finite_orders_conjecture("vi")


def test_even_k_exceptions():
    report = verify_even_k_exceptions(6, 200)
    assert report.passed


def test_williams():
    assert williams_check(1000).passed


def test_carmichael():
    assert carmichael_check(90).passed
    with pytest.raises(ValueError):
        carmichael_check(91)


def test_wall_sun_sun_primes():
    assert wall_sun_sun_primes(1, 1000) == []
    assert 13 in wall_sun_sun_primes(2, 100)


def test_main_theorem_small():
    assert verify_main_theorem(300, [1, 3]).passed
    assert verify_main_theorem(300, [2, 4]).passed


def test_lcm_tables_small():
    assert verify_lcm_tables(80, 4).passed


def test_wyler_small():
    assert verify_wyler(300, 4).passed


def test_powers_of_two_sweep():
    assert verify_powers_of_two(8, 7).passed


def test_identities_small():
    assert verify_identities(k_max=4, m_max=300, n_max=60).passed
