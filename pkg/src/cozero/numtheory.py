"""Exact integer arithmetic: factorization, totient, divisor enumeration.

Everything is deterministic trial division on Python integers, which are
arbitrary precision, so every count and sum in the library stays exact.
Intended working range is n up to roughly 10**12.
"""

from __future__ import annotations

from functools import lru_cache

Factorization = list[tuple[int, int]]


@lru_cache(maxsize=None)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    pairs = []
    rem = n
    exp = 0
    while rem % 2 == 0:
        rem //= 2
        exp += 1
    if exp:
        pairs.append((2, exp))
    p = 3
    while p * p <= rem:
        if rem % p == 0:
            exp = 0
            while rem % p == 0:
                rem //= p
                exp += 1
            pairs.append((p, exp))
        p += 2
    if rem > 1:
        pairs.append((rem, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """Prime factorization of n as (prime, exponent) pairs, primes ascending."""
    if n < 2:
        raise ValueError(f"factorize requires an integer >= 2, got {n}")
    return list(_factor_pairs(n))


def is_prime(n: int) -> bool:
    """True when n is prime."""
    return n >= 2 and _factor_pairs(n) == ((n, 1),)


def euler_phi(n: int) -> int:
    """Euler's totient, the count of integers in [1, n] coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi requires an integer >= 1, got {n}")
    if n == 1:
        return 1
    result = n
    for p, _ in _factor_pairs(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors requires an integer >= 1, got {n}")
    if n == 1:
        return [1]
    divs = [1]
    for p, e in _factor_pairs(n):
        power = 1
        extended = list(divs)
        for _ in range(e):
            power *= p
            extended.extend(d * power for d in divs)
        divs = extended
    divs.sort()
    return divs


def proper_divisors(n: int) -> list[int]:
    """Divisors of n excluding 1 and n itself, ascending."""
    return [d for d in divisors(n) if d != 1 and d != n]


def prime_power_radical(n: int) -> tuple[int, int] | None:
    """(p, e) when n = p**e for a prime p, otherwise None."""
    if n < 2:
        raise ValueError(f"prime_power_radical requires an integer >= 2, got {n}")
    pairs = _factor_pairs(n)
    if len(pairs) == 1:
        return pairs[0]
    return None


def is_prime_power(n: int) -> bool:
    """True when n is a positive power of a single prime."""
    return n >= 2 and len(_factor_pairs(n)) == 1
