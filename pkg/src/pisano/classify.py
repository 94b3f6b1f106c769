"""Zero-count classification of moduli from prime-factor data.

Order classes are plain ints: the number of zeros in one period (1, 2, or
4 for b = 1 sequences; other values only arise for general (a, b), with 0
reserved for zero-free eventually-periodic cycles).
"""

from __future__ import annotations

from functools import lru_cache

from .arith import divisors, factorize, is_prime
from .periods import profile_fast, profile_oracle
from .report import Counterexample, SweepReport
from .seq import RecurrenceParams

OEIS_IDS = {"A053029": 4, "A053030": 2, "A053031": 1}

# Rank residue mod 4 -> order, for odd primes (Wyler-type correspondence).
_RANK_MOD4_TO_ORDER = {1: 4, 3: 4, 0: 2, 2: 1}


@lru_cache(maxsize=None)
def _prime_rank(k: int, p: int) -> int:
    """Index of the first zero of the K-Fibonacci sequence mod prime p."""
    a = k % p
    u, v = 0, 1 % p
    steps = 0
    while True:
        u, v = v, (a * v + u) % p
        steps += 1
        if u == 0:
            return steps


def _odd_prime_order(k: int, p: int) -> int:
    return _RANK_MOD4_TO_ORDER[_prime_rank(k, p) % 4]


def _combine(mod1: int, w1: int, mod2: int, w2: int) -> int:
    """Order of lcm[mod1, mod2] from the multiplication table (coprime parts)."""
    if w1 == 2 or w2 == 2:
        return 2
    if w1 == w2:
        return w1
    one_mod = mod1 if w1 == 1 else mod2
    return 4 if one_mod == 2 else 2


def classify_by_factors(m: int, k: int = 1) -> int:
    """Order of m for the K-Fibonacci sequence, from prime ranks alone.

    Never counts zeros directly: each odd prime contributes its rank mod 4,
    the power of 2 follows the closed-form rules, and parts combine through
    the lcm table.  Even k supports odd m only.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k % 2 == 0 and m % 2 == 0:
        raise ValueError("classification for even K is restricted to odd m")
    if m == 1:
        return 1
    parts: list[tuple[int, int]] = []
    for p, e in factorize(m).factors:
        if p == 2:
            parts.append((2**e, 1 if e <= 2 else 2))
        else:
            parts.append((p**e, _odd_prime_order(k, p)))
    mod_acc, w_acc = parts[0]
    for mod, w in parts[1:]:
        w_acc = _combine(mod_acc, w_acc, mod, w)
        mod_acc *= mod
    return w_acc


def order_of(k: int, m: int) -> int:
    """Order via the structured fast path (b = 1)."""
    return profile_fast(RecurrenceParams(k, 1), m).order


def omega_lcm_table(k: int, m: int, n: int) -> frozenset[int]:
    """Table-predicted order of lcm[m, n] from the orders of m and n.

    Single-valued for odd k, or for odd m and n; for even k with an even
    argument the even-K table is honest about its ambiguous cells and the
    full candidate set is returned.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    wm = order_of(k, m)
    wn = order_of(k, n)
    if k % 2 == 1 or (m % 2 == 1 and n % 2 == 1):
        return frozenset({_combine(m, wm, n, wn)})
    pair = frozenset({wm, wn})
    if pair in ({1, 2}, {1, 4}):
        return frozenset({1, 2})
    if pair == {1}:
        return frozenset({1})
    if pair == {4}:
        return frozenset({4})
    return frozenset({2})


def rank_order_correspondence(p: int, k: int = 1) -> tuple[int, int]:
    """(rank mod 4, order) for an odd prime, asserting the correspondence."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    prof = profile_fast(RecurrenceParams(k, 1), p)
    assert prof.rank is not None
    r4 = prof.rank % 4
    if _RANK_MOD4_TO_ORDER[r4] != prof.order:
        raise AssertionError(
            f"rank/order correspondence violated at p={p}, K={k}: "
            f"rank={prof.rank}, order={prof.order}"
        )
    return r4, prof.order


def oeis_sequence(seq_id: str, limit: int) -> list[int]:
    """All m <= limit in the named zero-count class (classic sequence), ascending."""
    if seq_id not in OEIS_IDS:
        raise ValueError(f"unknown sequence id: {seq_id}")
    if limit > 10**6:
        raise ValueError(f"limit too large: {limit}")
    target = OEIS_IDS[seq_id]
    return [m for m in range(1, limit + 1) if classify_by_factors(m, 1) == target]


def format_bfile(seq: list[int]) -> str:
    """OEIS b-file text: one '<index> <value>' pair per line, 1-based."""
    return "".join(f"{i} {v}\n" for i, v in enumerate(seq, start=1))


def verify_oeis_conjectures(limit: int) -> SweepReport:
    """Exhaustively check the factor-closure characterizations of the
    order-4 and order-1 classes against brute-force zero counts.

    The repaired statements are used: 'factors' exclude 1 and m, and the
    vacuous prime case is excluded from the closure-implies-order direction.
    """
    if limit < 4:
        raise ValueError(f"limit must be >= 4, got {limit}")
    orders = {
        m: profile_oracle(RecurrenceParams(1, 1), m).order for m in range(1, limit + 1)
    }
    bad: list[Counterexample] = []

    def closure(u: int, target: int) -> bool:
        divs = divisors(u)
        return all(orders[d] == target for d in divs[1:-1])

    for u in range(3, limit + 1, 2):
        if is_prime(u):
            continue
        # order-4 closure forces order 4 for u and 2u
        if closure(u, 4):
            for m in (u, 2 * u):
                if m <= limit and orders[m] != 4:
                    bad.append(
                        Counterexample({"m": m, "clause": "order4-closure"}, 4, orders[m])
                    )
        # order-1 closure forces order 1 for u, 2u, and 4u
        if closure(u, 1):
            for m in (u, 2 * u, 4 * u):
                if m <= limit and orders[m] != 1:
                    bad.append(
                        Counterexample({"m": m, "clause": "order1-closure"}, 1, orders[m])
                    )
    for m in range(4, limit + 1):
        w = orders[m]
        if w == 4:
            u = m // 2 if m % 2 == 0 else m
            ok = m % 4 != 0 and u % 2 == 1 and all(orders[d] == 4 for d in divisors(u)[1:])
            if not ok:
                bad.append(Counterexample({"m": m, "clause": "order4-form"}, 4, w))
        elif w == 1:
            u = m
            j = 0
            while u % 2 == 0:
                u //= 2
                j += 1
            ok = j <= 2 and all(orders[d] == 1 for d in divisors(u)[1:])
            if not ok:
                bad.append(Counterexample({"m": m, "clause": "order1-form"}, 1, w))
    return SweepReport.from_scan("oeis-conjectures", {"k": 1}, 1, limit, bad)
