import random
from math import gcd

import pytest

from delsarte.arith import (cyclic_subgroup, euler_phi, factorize, is_prime, multiplicative_order,
                            next_prime, primes_in_class, units)
from delsarte.errors import DomainError

from oracles import naive_order


def test_is_prime_small_range():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 2000):
        if sieve[i]:
            for j in range(i * i, 2000, i):
                sieve[j] = False
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if sieve[n]]


def test_factorize_reconstructs():
    for n in [1, 2, 3486, 292824, 2**61 - 1, (10**6 + 3) * (10**6 + 33), 1806 * 43 * 7 * 3 * 2]:
        f = factorize(n)
        prod = 1
        for p, e in f.items():
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_euler_phi():
    assert euler_phi(1806) == 504
    assert euler_phi(3486) == 1 * 2 * 6 * 82  # 2 * 3 * 7 * 83
    assert euler_phi(1) == 1
    for n in range(2, 300):
        assert euler_phi(n) == len(units(n))


def test_multiplicative_order_examples():
    assert multiplicative_order(1, 17) == 1
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(43, 3486) == 82


def test_multiplicative_order_against_naive():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randrange(2, 5000)
        t = rng.randrange(1, n)
        if gcd(t, n) == 1:
            assert multiplicative_order(t, n) == naive_order(t, n)


def test_multiplicative_order_errors():
    with pytest.raises(DomainError):
        multiplicative_order(2, 8)
    with pytest.raises(DomainError):
        multiplicative_order(1, 1)


def test_cyclic_subgroup():
    assert cyclic_subgroup(2, 5) == [1, 2, 4, 3]
    assert cyclic_subgroup(3, 8) == [1, 3]
    with pytest.raises(DomainError):
        cyclic_subgroup(2, 4)


def test_prime_helpers():
    assert next_prime(7) == 11
    ps = primes_in_class(43, 966, 3)
    assert all(is_prime(p) and p % 966 == 43 for p in ps)
    with pytest.raises(DomainError):
        primes_in_class(2, 4, 1)
