"""Recurrence engine for (a,b)-Fibonacci and K-Lucas sequences modulo m.

The sequence is F_0 = 0, F_1 = 1, F_n = a*F_{n-1} + b*F_{n-2}; the b = 1
family (K-Fibonacci) additionally gets a 2x2 matrix fast path and the
companion Lucas sequence L_0 = 2, L_1 = K.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

Matrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class RecurrenceParams:
    """Coefficient pair (a, b); seeds are fixed at F_0 = 0, F_1 = 1.

    Coefficients are stored in signed canonical form and reduced into
    [0, m) at each modular use site.
    """

    a: int
    b: int

    @classmethod
    def k_fibonacci(cls, k: int) -> "RecurrenceParams":
        return cls(k, 1)

    @property
    def is_k_fib(self) -> bool:
        return self.b == 1


class PairState(NamedTuple):
    """Two consecutive residues (F_n, F_{n+1}); both strictly below m."""

    u: int
    v: int


def step(params: RecurrenceParams, state: PairState, m: int) -> PairState:
    """Advance (F_n, F_{n+1}) to (F_{n+1}, F_{n+2}) modulo m."""
    a = params.a % m
    b = params.b % m
    return PairState(state.v, (a * state.v + b * state.u) % m)


def _mat_mul(x: Matrix, y: Matrix, m: int) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return (
        ((a * e + b * g) % m, (a * f + b * h) % m),
        ((c * e + d * g) % m, (c * f + d * h) % m),
    )


def matrix_power(k: int, n: int, m: int) -> Matrix:
    """[[F_{K,n+1}, F_{K,n}], [F_{K,n}, F_{K,n-1}]] mod m, by square-and-multiply."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    one = 1 % m
    base: Matrix = ((k % m, one), (one, 0))
    result: Matrix = ((one, 0), (0, one))
    while n:
        if n & 1:
            result = _mat_mul(result, base, m)
        base = _mat_mul(base, base, m)
        n >>= 1
    return result


def term_mod(params: RecurrenceParams, n: int, m: int) -> int:
    """F_n mod m; matrix exponentiation when b = 1, iteration otherwise."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1 or n == 0:
        return 0
    if params.b == 1:
        return matrix_power(params.a, n, m)[0][1]
    a = params.a % m
    b = params.b % m
    u, v = 0, 1 % m
    for _ in range(n):
        u, v = v, (a * v + b * u) % m
    return u


def term_mod_iterative(params: RecurrenceParams, n: int, m: int) -> int:
    """Plain stepping route for any b; cross-checks the matrix path in tests."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    a = params.a % m
    b = params.b % m
    u, v = 0, 1 % m
    for _ in range(n):
        u, v = v, (a * v + b * u) % m
    return u


def lucas_term_mod(params: RecurrenceParams, n: int, m: int) -> int:
    """L_{K,n} mod m for the companion sequence; defined for b = 1 only."""
    if params.b != 1:
        raise ValueError("Lucas companion sequence requires b = 1")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if n == 0:
        return 2 % m
    mat = matrix_power(params.a, n, m)
    return (mat[0][0] + mat[1][1]) % m
