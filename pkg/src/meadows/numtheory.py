"""Small number-theoretic helpers: trial-division primality, factorization, partitions.

Everything here is desk-scale (orders up to a few hundred), so trial division
is used throughout; no probabilistic tests.
"""

from __future__ import annotations

from collections.abc import Iterator


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as a list of (prime, exponent), ascending.

    factorize(1) == [].
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}; expected a positive integer")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n == p**k and p prime, or None if n is not a prime power.

    1 is not considered a prime power.
    """
    if n < 2:
        return None
    factors = factorize(n)
    if len(factors) != 1:
        return None
    return factors[0]


def is_squarefree(n: int) -> bool:
    """True iff every exponent in the factorization of n is 1 (true for n=1)."""
    return all(e == 1 for _, e in factorize(n))


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the integer partitions of n >= 0 as weakly decreasing tuples.

    partitions(0) yields the single empty partition.  Order: largest first
    part first, i.e. (4), (3,1), (2,2), (2,1,1), (1,1,1,1) for n=4.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}; expected a nonnegative integer")

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)
