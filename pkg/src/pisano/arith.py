"""Integer utilities: factorization, primality, lcm, 2-adic valuation, orders.

Everything here is deterministic and exact. Supported inputs stay within
64 bits; moduli elsewhere in the package stay below 2**31 so products fit
comfortably in native precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm, prod

MAX_SUPPORTED = 2**63 - 1

# Witnesses giving a deterministic Miller-Rabin test for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)
_SMALL_PRIME_SET = set(_SMALL_PRIMES)


def primes(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit <= _TRIAL_LIMIT:
        from bisect import bisect_right

        return _SMALL_PRIMES[: bisect_right(_SMALL_PRIMES, limit)]
    return _sieve(limit)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 2**64."""
    if n < 2:
        return False
    if n <= _TRIAL_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m_batch, r, q = 2, 128, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m_batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m_batch
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to factor {n}")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ordered (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def factorize(n: int) -> Factorization:
    """Prime factorization for 1 <= n <= 2**63 - 1.  factorize(1) is empty."""
    if not 1 <= n <= MAX_SUPPORTED:
        raise ValueError(f"n out of range: {n}")
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            q = stack.pop()
            if is_prime(q):
                counts[q] = counts.get(q, 0) + 1
            else:
                d = _pollard_rho(q)
                stack.append(d)
                stack.append(q // d)
    return Factorization(tuple(sorted(counts.items())))


def divisors(n: int) -> list[int]:
    return factorize(n).divisors()


def lcm_list(xs: list[int]) -> int:
    """lcm of a list of positive integers; empty list gives 1."""
    result = 1
    for x in xs:
        if x < 1:
            raise ValueError(f"entries must be positive, got {x}")
        result = lcm(result, x)
        if result > MAX_SUPPORTED:
            raise OverflowError("lcm exceeds supported integer width")
    return result


def nu2(n: int) -> int:
    """2-adic valuation: largest x with 2**x dividing n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n & -n).bit_length() - 1


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    if p <= 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def totient(n: int) -> int:
    """Euler's totient via factorization."""
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n).factors)


def mult_order(a: int, m: int) -> int:
    """Least t >= 1 with a**t == 1 (mod m); requires gcd(a, m) == 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    order = totient(m)
    for q, _ in factorize(order).factors:
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def mult_order_bruteforce(a: int, m: int) -> int:
    """Repeated-multiplication route; cross-checks mult_order in tests."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    x = a
    t = 1
    while x != 1:
        x = x * a % m
        t += 1
    return t
