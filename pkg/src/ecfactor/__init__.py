"""Factoring squarefree integers by counting points on elliptic curves.

Library layout:
  arith     - exact integer kernel (gcd, Jacobi symbols, factoring, phi/tau/mu)
  curves    - Weierstrass curves mod n, twisting, screening, sampling
  counting  - exact point counts over F_p and squarefree moduli
  oracle    - black-box count oracles with query accounting
  reduction - the factoring algorithm driven by an oracle
  census    - empirical verification of the trace-counting lemmas
  cli       - command-line front end
"""

from .arith import ReducedFraction, reduce_fraction, jacobi, is_probable_prime
from .counting import PrimeCount, count_points_prime, count_points_squarefree
from .curves import Curve, FactorFound, sample_curve, screen, twist
from .oracle import DirectOracle, FactoredOracle, OracleStats
from .reduction import (
    FactorizationResult,
    ReductionConfig,
    SplitOutcome,
    factor_completely,
    recover_from_ratio,
    split,
)

__all__ = [
    "Curve",
    "DirectOracle",
    "FactorFound",
    "FactoredOracle",
    "FactorizationResult",
    "OracleStats",
    "PrimeCount",
    "ReducedFraction",
    "ReductionConfig",
    "SplitOutcome",
    "count_points_prime",
    "count_points_squarefree",
    "factor_completely",
    "is_probable_prime",
    "jacobi",
    "recover_from_ratio",
    "reduce_fraction",
    "sample_curve",
    "screen",
    "split",
    "twist",
]

__version__ = "0.1.0"
