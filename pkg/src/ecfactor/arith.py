"""Exact integer arithmetic kernel.

Everything here works on plain Python ints (arbitrary precision), so there
is no overflow anywhere in the pipeline. Factoring is plain trial division
and is only meant for inputs up to 2**64; the factoring algorithm proper
never calls it on anything it could not handle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

gcd = math.gcd
isqrt = math.isqrt


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a|m) for odd m >= 1; equals Legendre when m is prime.

    Negative a is reduced mod m first, so signed traces can be passed in.
    """
    if m <= 0 or m % 2 == 0:
        raise ValueError("jacobi: modulus must be odd and positive, got %r" % (m,))
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


@dataclass(frozen=True)
class ReducedFraction:
    numerator: int
    denominator: int


def reduce_fraction(num: int, den: int) -> ReducedFraction:
    """Lowest-terms form of num/den, both >= 1."""
    if num < 1 or den < 1:
        raise ValueError("reduce_fraction: both terms must be >= 1")
    g = math.gcd(num, den)
    return ReducedFraction(num // g, den // g)


# Deterministic Miller-Rabin witness set, valid for all x < 3.317e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _miller_rabin(x: int, base: int) -> bool:
    d = x - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    b = pow(base % x, d, x)
    if b == 1 or b == x - 1:
        return True
    for _ in range(s - 1):
        b = b * b % x
        if b == x - 1:
            return True
    return False


def is_probable_prime(x: int) -> bool:
    """Primality test: deterministic below 3.3e24, error < 2**-128 above."""
    if x < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if x % p == 0:
            return x == p
    if not all(_miller_rabin(x, w) for w in _MR_WITNESSES):
        return False
    if x < _MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(x)
    return all(_miller_rabin(x, rng.randrange(2, x - 1)) for _ in range(64))


@dataclass(frozen=True)
class SmallFactorization:
    """Complete factorization as (prime, exponent) pairs, primes increasing."""

    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out


@lru_cache(maxsize=1 << 16)
def factor_small(x: int) -> SmallFactorization:
    """Trial-division factorization; intended for x <= 2**64."""
    if x < 1:
        raise ValueError("factor_small: x must be >= 1")
    if is_probable_prime(x):
        return SmallFactorization(((x, 1),))
    factors = []
    for p in (2, 3):
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            factors.append((p, e))
    d = 5
    step = 2
    while d * d <= x:
        if x % d == 0:
            e = 0
            while x % d == 0:
                x //= d
                e += 1
            factors.append((d, e))
            if x > 1 and is_probable_prime(x):
                break
        d += step
        step = 6 - step
    if x > 1:
        factors.append((x, 1))
    return SmallFactorization(tuple(factors))


def tau(x: int) -> int:
    """Number of divisors."""
    out = 1
    for _, e in factor_small(x).factors:
        out *= e + 1
    return out


def omega(x: int) -> int:
    """Number of distinct prime factors."""
    return len(factor_small(x).factors)


def mobius(x: int) -> int:
    f = factor_small(x).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(x: int) -> int:
    out = x
    for p, _ in factor_small(x).factors:
        out = out // p * (p - 1)
    return out


def odd_part(x: int) -> int:
    """Largest odd divisor of x."""
    if x < 1:
        raise ValueError("odd_part: x must be >= 1")
    return x >> ((x & -x).bit_length() - 1)


def divisors(x: int) -> list[int]:
    """All divisors of x, sorted increasing."""
    out = [1]
    for p, e in factor_small(x).factors:
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def totient_sieve(limit: int) -> list[int]:
    """phi(0..limit) in one sweep; used by the large verification sweeps."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    return phi


def primes_up_to(limit: int) -> list[int]:
    """Primes <= limit by Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]
