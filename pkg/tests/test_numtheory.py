import pytest

from sameorder.numtheory import (
    divisors,
    euler_phi,
    is_prime,
    multiplicative_order,
    prime_divisors,
    prime_factors,
    prime_power_base,
    primes_upto,
)


def test_euler_phi_small_values():
    assert euler_phi(1) == 1
    assert euler_phi(8) == 4
    assert euler_phi(12) == 4


def test_euler_phi_powers_of_two():
    for k in range(1, 10):
        assert euler_phi(2**k) == 2 ** (k - 1)


def test_euler_phi_matches_coprime_count():
    import math

    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(512) == [2**k for k in range(10)]


def test_prime_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(360) == {2: 3, 3: 2, 5: 1}
    assert prime_divisors(360) == (2, 3, 5)


def test_prime_power_base():
    assert prime_power_base(1) is None
    assert prime_power_base(8) == 2
    assert prime_power_base(243) == 3
    assert prime_power_base(12) is None


def test_multiplicative_order():
    assert multiplicative_order(1, 1) == 1
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(3, 8) == 2
    with pytest.raises(ValueError):
        multiplicative_order(2, 8)
