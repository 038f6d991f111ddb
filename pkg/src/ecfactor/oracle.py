"""Point-counting oracles.

The factoring driver only ever sees `query(m, A, B) -> |E_m|`. Two
implementations are provided: one that knows the prime factorization
(the simulated black box the reduction is measured against) and one that
trial-divides and brute-forces, used to cross-check the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import factor_small
from .counting import count_affine_bruteforce, count_points_squarefree


class SingularCurveError(ValueError):
    """Query on a curve with gcd(discriminant, m) != 1."""


class UnsupportedModulusError(ValueError):
    """Query modulus outside the oracle's admissible set."""


@dataclass
class OracleStats:
    queries: int = 0
    per_modulus: dict[int, int] = field(default_factory=dict)

    def record(self, m: int) -> None:
        self.queries += 1
        self.per_modulus[m] = self.per_modulus.get(m, 0) + 1

    def snapshot(self) -> "OracleStats":
        return OracleStats(self.queries, dict(self.per_modulus))


def _check_smooth(m: int, A: int, B: int) -> None:
    g = gcd((4 * A ** 3 + 27 * B ** 2) % m, m)
    if g != 1:
        raise SingularCurveError(f"gcd(disc, {m}) = {g}; oracle requires smooth curves")


class FactoredOracle:
    """Oracle backed by hidden knowledge of the prime factorization.

    Admissible moduli are squarefree products of any subset of the
    configured primes; that covers the cofactors the recursion asks about.
    """

    def __init__(self, primes: list[int]):
        primes = sorted(primes)
        if len(set(primes)) != len(primes) or any(p < 5 for p in primes):
            raise ValueError("FactoredOracle: primes must be distinct and >= 5")
        self.primes = primes
        self.stats = OracleStats()

    def _split(self, m: int) -> list[int]:
        parts = []
        rest = m
        for p in self.primes:
            if rest % p == 0:
                parts.append(p)
                rest //= p
        if rest != 1 or m < 2:
            raise UnsupportedModulusError(
                f"modulus {m} is not a squarefree product of the oracle's primes"
            )
        return parts

    def query(self, m: int, A: int, B: int) -> int:
        parts = self._split(m)
        _check_smooth(m, A, B)
        self.stats.record(m)
        return count_points_squarefree(parts, A, B)


class DirectOracle:
    """Oracle that factors m itself and counts each prime by brute force."""

    def __init__(self, limit: int):
        self.limit = limit
        self.stats = OracleStats()

    def query(self, m: int, A: int, B: int) -> int:
        if m < 2 or m > self.limit:
            raise UnsupportedModulusError(f"modulus {m} outside [2, {self.limit}]")
        facts = factor_small(m).factors
        if any(e > 1 for _, e in facts) or any(p < 5 for p, _ in facts):
            raise UnsupportedModulusError(
                f"modulus {m} must be squarefree with prime factors >= 5"
            )
        _check_smooth(m, A, B)
        self.stats.record(m)
        out = 1
        for p, _ in facts:
            out *= count_affine_bruteforce(p, A % p, B % p) + 1  # + point at infinity
        return out
