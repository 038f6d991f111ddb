"""Factoring a squarefree n by driving a point-counting oracle.

One round: sample a smooth curve, query its count N, then walk twists
E^d for d = 2, 3, ... and query each twisted count N_d. When d is a
non-residue mod exactly one prime p | n, the reduced ratio N/N_d is
(p+1-a_p)/(p+1+a_p) divided by their common factor, so scaling the
reduced terms by small multipliers and summing recovers 2(p+1), hence p.
Fresh curves are drawn until one has a trace whose gcd with p+1 is small
enough for the multiplier search to hit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .arith import ReducedFraction, is_probable_prime, reduce_fraction
from .curves import (
    Curve,
    CurveSupplyExhausted,
    FactorFound,
    sample_curve,
    twist,
)
from .oracle import OracleStats


@dataclass(frozen=True)
class ReductionConfig:
    """All budgets of the algorithm; None means 'scale with n'."""

    D: int = 12
    max_d: int | None = None
    max_curves: int | None = None
    k: float = 8.0
    seed: int = 0

    def resolved_max_d(self, n: int) -> int:
        if self.max_d is not None:
            return self.max_d
        return 4 * math.ceil(math.log(n) ** 2)

    def resolved_max_curves(self, n: int) -> int:
        if self.max_curves is not None:
            return self.max_curves
        return math.ceil(self.k * math.log(n) ** 2)


@dataclass(frozen=True)
class Recovery:
    factor: int
    multiplier: int
    ratio: ReducedFraction


@dataclass(frozen=True)
class SplitWitness:
    curve: Curve
    d: int
    ratio: ReducedFraction | None
    multiplier: int | None


@dataclass(frozen=True)
class SplitOutcome:
    factor: int | None  # None means exhausted
    witness: SplitWitness | None
    curves_tried: int
    queries: int

    @property
    def exhausted(self) -> bool:
        return self.factor is None


def recover_from_ratio(N: int, Nd: int, D: int, n: int) -> Recovery | None:
    """Try to read a prime factor of n off the reduced ratio N/Nd.

    The common factor of p+1-a_p and p+1+a_p divides 2*gcd(p+1, a_p), so
    multipliers up to 2D suffice whenever gcd(a_p, p+1) <= D. Candidates
    are accepted only on exact divisibility, so over-enumeration is safe.
    """
    if N < 1 or Nd < 1:
        raise ValueError("recover_from_ratio: counts must be >= 1")
    ratio = reduce_fraction(N, Nd)
    s = ratio.numerator + ratio.denominator
    for g in range(1, 2 * D + 1):
        v = g * s
        if v % 2:
            continue
        cand = v // 2 - 1
        if 1 < cand < n and n % cand == 0:
            return Recovery(cand, g, ratio)
    return None


def split(n: int, oracle, cfg: ReductionConfig) -> SplitOutcome:
    """Find one nontrivial factor of squarefree composite n, gcd(n, 6) = 1."""
    if n < 2 or math.gcd(n, 6) != 1:
        raise ValueError("split: n must be a squarefree composite coprime to 6")
    rng = random.Random(cfg.seed)
    max_d = cfg.resolved_max_d(n)
    max_curves = cfg.resolved_max_curves(n)
    before = oracle.stats.queries
    used: list[Curve] = []

    def queries() -> int:
        return oracle.stats.queries - before

    try:
        for _ in range(max_curves):
            c = sample_curve(n, rng, used)
            used.append(c)
            N = oracle.query(n, c.A, c.B)
            for d in range(2, max_d + 1):
                g = math.gcd(d, n)
                if g > 1:
                    if g < n:
                        return SplitOutcome(
                            g, SplitWitness(c, d, None, None), len(used), queries()
                        )
                    continue
                cd = twist(c, d)
                Nd = oracle.query(n, cd.A, cd.B)
                rec = recover_from_ratio(N, Nd, cfg.D, n)
                if rec is not None:
                    return SplitOutcome(
                        rec.factor,
                        SplitWitness(c, d, rec.ratio, rec.multiplier),
                        len(used),
                        queries(),
                    )
    except FactorFound as ff:
        return SplitOutcome(ff.factor, None, len(used), queries())
    except CurveSupplyExhausted:
        pass
    return SplitOutcome(None, None, len(used), queries())


@dataclass(frozen=True)
class FactorizationResult:
    n: int
    factors: tuple[int, ...]
    stats: OracleStats
    curves_used: int
    failed_cofactor: int | None = None

    @property
    def success(self) -> bool:
        return self.failed_cofactor is None


def _child_seed(seed: int, m: int) -> int:
    return (seed * 1000003 + m) & (2 ** 64 - 1)


def factor_completely(n: int, oracle, cfg: ReductionConfig) -> FactorizationResult:
    """Complete factorization of squarefree n >= 2 via repeated splitting.

    Factors 2 and 3 are stripped first (the curve model needs p >= 5); the
    rest is a work list of cofactors, split recursively. A stuck cofactor
    is reported rather than guessed at.
    """
    if n < 2:
        raise ValueError("factor_completely: n must be >= 2")
    before = oracle.stats.snapshot()
    primes: list[int] = []
    m = n
    for small in (2, 3):
        if m % small == 0:
            primes.append(small)
            m //= small
    work = [m] if m > 1 else []
    curves_used = 0
    failed = None
    while work:
        m = work.pop()
        if is_probable_prime(m):
            primes.append(m)
            continue
        sub = ReductionConfig(
            cfg.D, cfg.max_d, cfg.max_curves, cfg.k, _child_seed(cfg.seed, m)
        )
        outcome = split(m, oracle, sub)
        curves_used += outcome.curves_tried
        if outcome.exhausted:
            failed = m
            break
        work.append(outcome.factor)
        work.append(m // outcome.factor)
    delta = OracleStats(
        oracle.stats.queries - before.queries,
        {
            mm: c - before.per_modulus.get(mm, 0)
            for mm, c in oracle.stats.per_modulus.items()
            if c - before.per_modulus.get(mm, 0) > 0
        },
    )
    return FactorizationResult(n, tuple(sorted(primes)), delta, curves_used, failed)
