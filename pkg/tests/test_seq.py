import random

import pytest

from pisano.seq import (
    PairState,
    RecurrenceParams,
    lucas_term_mod,
    matrix_power,
    step,
    term_mod,
    term_mod_iterative,
)

FIB = RecurrenceParams(1, 1)


def test_term_mod_examples():
    assert term_mod(FIB, 15, 10**6) == 610
    for params in (FIB, RecurrenceParams(3, -2), RecurrenceParams(0, 5)):
        assert term_mod(params, 0, 97) == 0
        assert term_mod(params, 1, 97) == 1
    assert term_mod(RecurrenceParams(2, 1), 5, 1000) == 29
    assert term_mod(FIB, 100, 1) == 0
    with pytest.raises(ValueError):
        term_mod(FIB, 5, 0)


def test_lucas_examples():
    assert lucas_term_mod(FIB, 0, 100) == 2
    assert lucas_term_mod(FIB, 4, 100) == 7
    # companion identity L_n = F_{n+1} + F_{n-1}
    for k in range(1, 6):
        params = RecurrenceParams(k, 1)
        for n in range(1, 40):
            expected = (term_mod(params, n + 1, 997) + term_mod(params, n - 1, 997)) % 997
            assert lucas_term_mod(params, n, 997) == expected
    with pytest.raises(ValueError):
        lucas_term_mod(RecurrenceParams(1, -1), 3, 10)


def test_matrix_power_examples():
    assert matrix_power(1, 2, 100) == ((2, 1), (1, 1))
    assert matrix_power(1, 12, 1000)[0][1] == 144
    for k in (1, 2, 5):
        for n in range(1, 30):
            (a, b), (c, d) = matrix_power(k, n, 10**6)
            det = (a * d - b * c) % 10**6
            assert det == (1 if n % 2 == 0 else 10**6 - 1)


def test_step_examples():
    assert step(FIB, PairState(0, 1), 10) == PairState(1, 1)
    assert step(FIB, PairState(3, 0), 5) == PairState(0, 3)
    assert step(RecurrenceParams(1, -1), PairState(1, 1), 7) == PairState(1, 0)


def test_matrix_and_iterative_agree():
    rng = random.Random(20240817)
    for _ in range(10**4):
        k = rng.randrange(1, 50)
        n = rng.randrange(0, 400)
        m = rng.randrange(2, 10**6)
        params = RecurrenceParams(k, 1)
        assert term_mod(params, n, m) == term_mod_iterative(params, n, m)


def test_parameter_reduction():
    rng = random.Random(99)
    for _ in range(300):
        a = rng.randrange(-20, 21)
        b = rng.randrange(-20, 21)
        n = rng.randrange(0, 120)
        m = rng.randrange(2, 500)
        assert term_mod(RecurrenceParams(a, b), n, m) == term_mod(
            RecurrenceParams(a + m, b), n, m
        )


def test_log_fibonacci_identity():
    m = 10**6
    for k in range(1, 11):
        params = RecurrenceParams(k, 1)
        for n in range(1, 201):
            lhs = (
                term_mod(params, n, m) ** 2
                - term_mod(params, n + 1, m) * term_mod(params, n - 1, m)
            ) % m
            assert lhs == (1 if n % 2 == 1 else m - 1)


def test_doubling_identity():
    m = 10**6
    for k in range(1, 11):
        params = RecurrenceParams(k, 1)
        for n in range(1, 201):
            assert term_mod(params, 2 * n, m) == (
                term_mod(params, n, m) * lucas_term_mod(params, n, m) % m
            )
