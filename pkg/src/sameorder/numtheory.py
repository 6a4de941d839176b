"""Small number-theoretic helpers used throughout the package."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(n: int) -> list[int]:
    """All primes p <= n, ascending."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(prime_factors(n)))


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    result = [1]
    for p, e in prime_factors(n).items():
        result = [d * p**k for d in result for k in range(e + 1)]
    return sorted(result)


def euler_phi(n: int) -> int:
    """Count of integers in 1..n coprime to n."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    value = n
    for p in prime_factors(n):
        value = value // p * (p - 1)
    return value


def prime_power_base(n: int) -> int | None:
    """The prime p if n = p**k with k >= 1, else None."""
    factors = prime_factors(n) if n >= 2 else {}
    if len(factors) == 1:
        return next(iter(factors))
    return None


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in the unit group mod n; requires gcd(a, n) = 1."""
    a %= n
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    for d in divisors(euler_phi(n)):
        if pow(a, d, n) == 1:
            return d
    raise AssertionError("unreachable: unit order divides phi(n)")
