"""Period, rank, order, and residue profiles modulo m.

Two independent routes: ``profile_oracle`` walks the state cycle directly
and anchors correctness; ``profile_fast`` (b = 1 only) factorizes the
modulus, lifts prime profiles to prime powers, and recombines via lcm.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import factorize, is_prime, lcm_list
from .seq import RecurrenceParams, term_mod


@dataclass(frozen=True)
class PisanoProfile:
    """Cycle structure of an (a,b)-Fibonacci sequence modulo m.

    ``order`` = 0 encodes an eventually-periodic sequence whose cycle
    contains no zero; ``rank`` and ``residue`` are then absent.
    """

    period: int
    rank: int | None
    order: int
    residue: int | None
    preperiod: int = 0

    @property
    def purely_periodic(self) -> bool:
        return self.preperiod == 0


def _oracle_pure(a: int, b: int, m: int) -> PisanoProfile:
    # gcd(b, m) = 1: the step map is invertible, so the walk returns to (0, 1).
    a %= m
    b %= m
    cap = m * m + m
    u, v = 0, 1
    steps = 0
    rank: int | None = None
    residue: int | None = None
    zeros = 0
    while True:
        u, v = v, (a * v + b * u) % m
        steps += 1
        if u == 0:
            zeros += 1
            if rank is None:
                rank = steps
                residue = v
            if v == 1:
                return PisanoProfile(steps, rank, zeros, residue, 0)
        if steps > cap:
            raise AssertionError(f"cycle walk exceeded {cap} states for m={m}")


def _oracle_eventual(a: int, b: int, m: int) -> PisanoProfile:
    # gcd(b, m) > 1: detect the entered cycle by first-repeated-state bookkeeping.
    a %= m
    b %= m
    seen: dict[int, int] = {}
    us: list[int] = []
    vs: list[int] = []
    u, v = 0, 1
    idx = 0
    key = v
    while key not in seen:
        seen[key] = idx
        us.append(u)
        vs.append(v)
        u, v = v, (a * v + b * u) % m
        idx += 1
        key = u * m + v
    mu = seen[key]
    period = idx - mu
    rank: int | None = None
    residue: int | None = None
    zeros = 0
    for i in range(mu, idx):
        if us[i] == 0:
            zeros += 1
            if rank is None:
                rank = i
                residue = vs[i]
    return PisanoProfile(period, rank, zeros, residue, mu)


def profile_oracle(params: RecurrenceParams, m: int) -> PisanoProfile:
    """Brute-force profile by walking consecutive-pair states from (0, 1)."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return PisanoProfile(1, 1, 1, 0, 0)
    if gcd(params.b, m) == 1:
        return _oracle_pure(params.a, params.b, m)
    return _oracle_eventual(params.a, params.b, m)


@lru_cache(maxsize=None)
def _prime_power_profile(k: int, p: int, e: int) -> tuple[int, int]:
    """(period, rank) of the K-Fibonacci sequence mod p**e, by lifting."""
    if e == 1:
        prof = _oracle_pure(k, 1, p)
        return prof.period, prof.rank
    period, rank = _prime_power_profile(k, p, e - 1)
    mod = p**e
    params = RecurrenceParams(k, 1)
    if term_mod(params, rank, mod) != 0:
        rank *= p
    if not (term_mod(params, period, mod) == 0 and term_mod(params, period + 1, mod) == 1):
        period *= p
    return period, rank


def profile_fast(params: RecurrenceParams, m: int) -> PisanoProfile:
    """Factor-lift-combine profile; b = 1 only.  Agrees with profile_oracle."""
    if params.b != 1:
        raise ValueError("profile_fast requires b = 1")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return PisanoProfile(1, 1, 1, 0, 0)
    periods = []
    ranks = []
    for p, e in factorize(m).factors:
        period, rank = _prime_power_profile(params.a, p, e)
        periods.append(period)
        ranks.append(rank)
    period = lcm_list(periods)
    rank = lcm_list(ranks)
    order = period // rank
    residue = term_mod(params, rank + 1, m)
    return PisanoProfile(period, rank, order, residue, 0)


def powers_of_two_profile(k: int, x: int) -> PisanoProfile:
    """Closed-form profile of the K-Fibonacci sequence modulo 2**x."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    m = 2**x
    if k % 2 == 0:
        v2 = x if k == 0 else min(x, (k & -k).bit_length() - 1)
        r = 2 ** (x + 1 - v2)
        period = rank = r
    elif x == 1:
        period, rank = 3, 3
    elif x == 2:
        period, rank = 6, 6
    else:
        period, rank = 3 * 2 ** (x - 1), 3 * 2 ** (x - 2)
    residue = term_mod(RecurrenceParams(k, 1), rank + 1, m)
    return PisanoProfile(period, rank, period // rank, residue, 0)


def residue_of(params: RecurrenceParams, m: int) -> int:
    """The term following the first zero, F_{rank+1} mod m; b = 1, m >= 2."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    res = profile_fast(params, m).residue
    assert res is not None
    return res


def is_wall_sun_sun(k: int, p: int) -> bool:
    """True iff the period mod p equals the period mod p**2."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p * p > 2**31 - 1:
        raise OverflowError(f"p**2 exceeds the supported modulus width: {p}")
    period = _oracle_pure(k, 1, p).period
    params = RecurrenceParams(k, 1)
    sq = p * p
    return term_mod(params, period, sq) == 0 and term_mod(params, period + 1, sq) == 1


def negative_index_check(params: RecurrenceParams, m: int, n: int) -> bool:
    """Test F_{period - n} == (-1)**(n+1) * F_n (mod m); b = 1."""
    period = profile_fast(params, m).period
    if not 0 <= n <= period:
        raise ValueError(f"n must lie in [0, {period}], got {n}")
    lhs = term_mod(params, period - n, m)
    fn = term_mod(params, n, m)
    rhs = fn if n % 2 == 1 else (-fn) % m
    return lhs == rhs
