import random
from math import gcd

import pytest

from ecfactor.arith import factor_small, isqrt, jacobi, primes_up_to
from ecfactor.counting import (
    PrimeCount,
    count_affine_bruteforce,
    count_points_prime,
    count_points_squarefree,
)


def random_smooth_pair(rng, m):
    while True:
        A, B = rng.randrange(m), rng.randrange(m)
        if gcd((4 * A ** 3 + 27 * B ** 2) % m, m) == 1:
            return A, B


class TestCountPointsPrime:
    def test_examples(self):
        assert count_points_prime(5, 1, 1) == PrimeCount(5, 9, -3)
        assert count_points_prime(7, 1, 1) == PrimeCount(7, 5, 3)
        assert count_points_prime(5, 4, 3) == PrimeCount(5, 3, 3)

    def test_matches_naive_double_loop(self):
        for p in (5, 7, 11, 13):
            for A in range(p):
                for B in range(p):
                    if (4 * A ** 3 + 27 * B ** 2) % p == 0:
                        continue
                    affine = sum(
                        1
                        for x in range(p)
                        for y in range(p)
                        if (y * y - (x ** 3 + A * x + B)) % p == 0
                    )
                    assert count_points_prime(p, A, B).npoints == affine + 1

    def test_rejects_singular_and_tiny_primes(self):
        with pytest.raises(ValueError):
            count_points_prime(5, 0, 0)
        with pytest.raises(ValueError):
            count_points_prime(3, 1, 1)
        with pytest.raises(ValueError):
            count_points_prime(9, 1, 1)

    def test_hasse_random(self):
        rng = random.Random(5)
        primes = [p for p in primes_up_to(10 ** 4) if p >= 5]
        for _ in range(10 ** 4):
            p = rng.choice(primes)
            A, B = random_smooth_pair(rng, p)
            pc = count_points_prime(p, A, B)
            assert pc.npoints == p + 1 - pc.trace
            assert pc.trace ** 2 <= 4 * p
            assert abs(pc.trace) <= isqrt(4 * p)

    def test_twist_identity(self):
        rng = random.Random(6)
        for p in primes_up_to(299):
            if p < 5:
                continue
            for _ in range(20):
                A, B = random_smooth_pair(rng, p)
                n0 = count_points_prime(p, A, B).npoints
                for d in range(1, p):
                    nd = count_points_prime(p, A * d * d % p, B * d ** 3 % p).npoints
                    if jacobi(d, p) == -1:
                        assert n0 + nd == 2 * (p + 1)
                    else:
                        assert n0 == nd


class TestCountPointsSquarefree:
    def test_examples(self):
        assert count_points_squarefree([5, 7], 1, 1) == 45
        assert count_points_squarefree([7], 1, 1) == count_points_prime(7, 1, 1).npoints
        assert count_points_squarefree([5, 7], 4, 8) == 15

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            count_points_squarefree([5, 5], 1, 1)


class TestAffineBruteforce:
    def test_examples(self):
        assert count_affine_bruteforce(5, 1, 1) == 8
        assert count_affine_bruteforce(35, 1, 1) == 32
        assert count_affine_bruteforce(7, 1, 1) == 4

    def test_rejects_oversized(self):
        with pytest.raises(ValueError):
            count_affine_bruteforce(10 ** 5 + 1, 1, 1)

    def test_crt_cross_check(self):
        # affine count mod n equals the product of per-prime affine counts
        rng = random.Random(7)
        for n in range(5, 3001, 2):
            facts = factor_small(n).factors
            if any(e > 1 for _, e in facts) or any(p < 5 for p, _ in facts):
                continue
            primes = [p for p, _ in facts]
            for _ in range(10):
                A, B = random_smooth_pair(rng, n)
                prod = 1
                for p in primes:
                    prod *= count_points_prime(p, A % p, B % p).npoints - 1
                assert count_affine_bruteforce(n, A, B) == prod

    def test_legendre_sum_within_hasse(self):
        rng = random.Random(8)
        primes = [p for p in primes_up_to(3000) if p >= 5]
        for _ in range(500):
            p = rng.choice(primes)
            A, B = random_smooth_pair(rng, p)
            s = count_points_prime(p, A, B).npoints - (p + 1)
            assert abs(s) <= isqrt(4 * p)
