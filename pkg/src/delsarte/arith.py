"""Elementary number theory: factoring, Euler's totient, multiplicative order."""

from __future__ import annotations

import random
from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError

_TRIAL_LIMIT = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)  # seeded by n: factorisations are reproducible
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    factors: dict[int, int] = {}
    limit = min(_TRIAL_LIMIT, isqrt(n))
    p = 2
    while p <= limit and n > 1:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
        if p * p > n:
            break
    stack = [n] if n > 1 else []
    while stack:
        k = stack.pop()
        if is_prime(k):
            factors[k] = factors.get(k, 0) + 1
        else:
            f = _pollard_rho(k)
            stack += [f, k // f]
    return tuple(sorted(factors.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation as ``{prime: exponent}``.

    Trial division up to 10**6, then Pollard rho on whatever cofactor is left.
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    return dict(_factor_cached(n))


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def multiplicative_order(t: int, n: int) -> int:
    """Least k >= 1 with t**k == 1 (mod n).

    Starts from phi(n) and strips prime factors while the power stays 1.
    """
    if n < 2:
        raise DomainError(f"modulus must be at least 2, got {n}")
    t %= n
    if gcd(t, n) != 1:
        raise DomainError(f"{t} is not a unit modulo {n}")
    k = euler_phi(n)
    for p, e in factorize(k).items():
        for _ in range(e):
            if pow(t, k // p, n) == 1:
                k //= p
            else:
                break
    return k


def units(n: int) -> list[int]:
    """Representatives 1 <= t < n of (Z/n)^x in increasing order."""
    return [t for t in range(1, n) if gcd(t, n) == 1]


def cyclic_subgroup(t: int, n: int) -> list[int]:
    """The powers t**0, t**1, ... (mod n) up to the first repeat of 1."""
    if gcd(t, n) != 1:
        raise DomainError(f"{t} is not a unit modulo {n}")
    out = [1 % n]
    x = t % n
    while x != 1 % n:
        out.append(x)
        x = x * t % n
    return out


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    n += 1
    while not is_prime(n):
        n += 1
    return n


def primes_in_class(residue: int, modulus: int, count: int, start: int = 2) -> list[int]:
    """The first ``count`` primes >= start congruent to residue mod modulus."""
    if gcd(residue, modulus) != 1:
        raise DomainError(f"no primes in non-unit class {residue} mod {modulus}")
    out = []
    n = start + (residue - start) % modulus
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += modulus
    return out
