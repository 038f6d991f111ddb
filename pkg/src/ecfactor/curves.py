"""Weierstrass curves y^2 = x^3 + Ax + B over Z/nZ.

Every operation that takes a gcd against the modulus can stumble on a
nontrivial factor of n; that outcome is surfaced as `FactorFound` so the
factoring driver can stop immediately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

SMOOTH = "smooth"
SINGULAR = "singular"
RELATED = "related"
UNRELATED = "unrelated"
FACTOR = "factor"


class FactorFound(Exception):
    """A gcd with the modulus came out nontrivial: the algorithm is done."""

    def __init__(self, factor: int, modulus: int):
        super().__init__(f"found factor {factor} of {modulus}")
        self.factor = factor
        self.modulus = modulus


class CurveSupplyExhausted(Exception):
    """sample_curve hit its redraw cap without producing a fresh curve."""


@dataclass(frozen=True)
class Curve:
    n: int
    A: int
    B: int

    def discriminant_gcd(self) -> int:
        return gcd((4 * self.A ** 3 + 27 * self.B ** 2) % self.n, self.n)


@dataclass(frozen=True)
class ScreenResult:
    kind: str  # SMOOTH | FACTOR | SINGULAR
    factor: int | None = None


def screen(n: int, A: int, B: int) -> ScreenResult:
    """Classify gcd(4A^3 + 27B^2, n): unit, proper factor, or fully singular."""
    if n < 2:
        raise ValueError("screen: modulus must be >= 2")
    g = gcd((4 * A ** 3 + 27 * B ** 2) % n, n)
    if g == 1:
        return ScreenResult(SMOOTH)
    if g == n:
        return ScreenResult(SINGULAR)
    return ScreenResult(FACTOR, g)


def twist(c: Curve, d: int) -> Curve:
    """Quadratic twist by d: (A, B) -> (A d^2, B d^3) mod n. Needs gcd(d,n)=1."""
    g = gcd(d, c.n)
    if g != 1:
        raise ValueError(f"twist: gcd(d, n) = {g} != 1; treat it as a found factor")
    return Curve(c.n, c.A * d * d % c.n, c.B * d ** 3 % c.n)


@dataclass(frozen=True)
class Relatedness:
    kind: str  # UNRELATED | RELATED | FACTOR
    factor: int | None = None


def isomorphic_gcd(c1: Curve, c2: Curve) -> Relatedness:
    """Necessary-condition isomorphism test: gcd(B2^2 A1^3 - A2^3 B1^2, n).

    Unit gcd means the curves share no isomorphism mod any prime of n; full
    gcd means they are related (isomorphic or twists) mod every prime; a
    proper gcd is a factor of n.
    """
    if c1.n != c2.n:
        raise ValueError("isomorphic_gcd: mismatched moduli")
    n = c1.n
    g = gcd((c2.B ** 2 * c1.A ** 3 - c2.A ** 3 * c1.B ** 2) % n, n)
    if g == 1:
        return Relatedness(UNRELATED)
    if g == n:
        return Relatedness(RELATED)
    return Relatedness(FACTOR, g)


def sample_curve(
    n: int,
    rng: random.Random,
    used: list[Curve],
    max_attempts: int | None = None,
) -> Curve:
    """Draw a uniform smooth curve mod n, unrelated to every curve in `used`.

    Raises FactorFound the moment any screening gcd is a proper factor, and
    CurveSupplyExhausted after the redraw cap (default 64*len(used) + 64).
    """
    if n < 5:
        raise ValueError("sample_curve: modulus must be >= 5")
    if max_attempts is None:
        max_attempts = 64 * len(used) + 64
    for _ in range(max_attempts):
        A = rng.randrange(n)
        B = rng.randrange(n)
        s = screen(n, A, B)
        if s.kind == FACTOR:
            raise FactorFound(s.factor, n)
        if s.kind == SINGULAR:
            continue
        c = Curve(n, A, B)
        fresh = True
        for prev in used:
            r = isomorphic_gcd(prev, c)
            if r.kind == FACTOR:
                raise FactorFound(r.factor, n)
            if r.kind == RELATED:
                fresh = False
                break
        if fresh:
            return c
    raise CurveSupplyExhausted(
        f"no fresh curve mod {n} in {max_attempts} draws ({len(used)} used)"
    )
