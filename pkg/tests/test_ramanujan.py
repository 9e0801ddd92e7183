import random
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramcorr import (DomainError, RamanujanContext, brauer_rademacher,
                     bruteforce_row, build_sieve, cohen_mean, crt_solution,
                     ramanujan_matrix, ramanujan_sum,
                     ramanujan_sum_bruteforce, residue_count, s_sum,
                     s_sum_closed, truncated_orthogonality)

T = build_sieve(600)


@given(st.integers(min_value=1, max_value=150),
       st.integers(min_value=0, max_value=400))
def test_closed_form_matches_exponential_sum(q, n):
    assert ramanujan_sum(T, q, n) == ramanujan_sum_bruteforce(T, q, n)


def test_known_values():
    assert ramanujan_sum(T, 1, 5) == 1
    assert ramanujan_sum(T, 4, 2) == -2
    assert ramanujan_sum(T, 6, 1) == 1
    assert ramanujan_sum(T, 9, 3) == -3
    assert ramanujan_sum(T, 10, 10) == 4  # phi(10) at a multiple
    assert ramanujan_sum(T, 12, 0) == T.phi[12]


def test_period_and_negative_arguments():
    for q in (1, 2, 5, 12, 30):
        for n in range(0, q):
            assert ramanujan_sum(T, q, n) == ramanujan_sum(T, q, n + 7 * q)
            assert ramanujan_sum(T, q, -n) == ramanujan_sum(T, q, n)


def test_matrix_agrees_with_scalars():
    mat = ramanujan_matrix(T, 60, 90)
    for q in range(1, 61):
        for n in range(0, 91):
            assert mat[q, n] == ramanujan_sum(T, q, n)
    row = bruteforce_row(T, 45, 90)
    assert np.array_equal(mat[45], row)


def test_unit_average(table):
    for q in (1, 2, 9, 12, 30, 49):
        for h in (0, 1, 2, 6, 35):
            units = [k for k in range(1, q + 1) if gcd(k, q) == 1]
            direct = Fraction(sum(ramanujan_sum(table, q, k + h)
                                  for k in units), len(units))
            assert cohen_mean(table, q, h) == direct


def test_divisor_weighted_average_identity(table):
    for q in (6, 10, 15, 30, 66):
        for d in table.divisors(q):
            for n in (0, 1, 7, 12):
                got = brauer_rademacher(table, q, d, n)
                qd = q // d
                want = Fraction(table.mu[qd] * ramanujan_sum(table, qd, n),
                                table.phi[q])
                assert got == want


def test_divisor_weighted_average_rejects(table):
    with pytest.raises(DomainError):
        brauer_rademacher(table, 12, 2, 1)  # 12 not squarefree
    with pytest.raises(DomainError):
        brauer_rademacher(table, 15, 2, 1)  # 2 does not divide 15


def test_residue_count():
    for q in (1, 3, 8):
        for n in range(0, 30):
            for k in range(1, q + 1):
                want = sum(1 for m in range(1, n + 1) if m % q == k % q)
                assert residue_count(n, q, k) == want


def test_crt_solution():
    for q in (1, 2, 5, 12):
        for r in (1, 3, 7, 25):
            if gcd(q, r) != 1:
                continue
            for k in range(1, q + 1):
                for t in range(1, r + 1):
                    n = crt_solution(k, t, q, r)
                    assert 1 <= n <= q * r
                    assert n % q == k % q and n % r == t % r
    with pytest.raises(DomainError):
        crt_solution(1, 1, 6, 10)


def _s_direct(table, n_max, q, k, r):
    return sum(ramanujan_sum(table, r, n)
               for n in range(1, n_max + 1) if n % q == k % q)


def test_progression_sum_closed_forms(table):
    rng = random.Random(7)
    for _ in range(250):
        q = rng.randrange(1, 25)
        if rng.random() < 0.5:
            divs = table.divisors(q)
            r = divs[rng.randrange(len(divs))]
        else:
            r = rng.randrange(1, 25)
            if gcd(q, r) != 1:
                continue
        n = rng.randrange(0, 3 * q * r + 1)
        k = rng.randrange(1, q + 1)
        want = _s_direct(table, n, q, k, r)
        assert s_sum(table, n, q, k, r) == want
        assert s_sum_closed(table, n, q, k, r) == want


def test_progression_sum_rejects_mixed_modulus(table):
    with pytest.raises(DomainError):
        s_sum_closed(table, 50, 12, 1, 8)  # 8 neither divides 12 nor coprime


def test_truncated_orthogonality_limits(table):
    x = 10 ** 6
    for q in (1, 4, 9, 12):
        for r in (1, 4, 9, 12):
            for n in (0, 1, 5):
                avg = truncated_orthogonality(table, r, q, n, x)
                limit = ramanujan_sum(table, q, n) if r == q else 0
                assert abs(avg - limit) <= Fraction(5, 100)


def test_context_binding(table):
    ctx = RamanujanContext(table)
    assert ctx.ramanujan_sum(12, 8) == ramanujan_sum(table, 12, 8)
    assert ctx.cohen_mean(10, 3) == cohen_mean(table, 10, 3)
    assert ctx.s_sum(40, 6, 1, 3) == s_sum(table, 40, 6, 1, 3)
    assert ctx.s_sum_closed(40, 6, 1, 3) == s_sum_closed(table, 40, 6, 1, 3)
    assert ctx.brauer_rademacher(15, 3, 2) == brauer_rademacher(
        table, 15, 3, 2)
    assert ctx.ramanujan_sum_bruteforce(9, 2) == ramanujan_sum(table, 9, 2)
