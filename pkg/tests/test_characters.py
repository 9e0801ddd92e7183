from math import gcd

import pytest

from ramcorr import (CyclotomicElement, DomainError, char_eval,
                     character_group, conductor, cyclotomic_poly,
                     primitive_part, primitive_sum, primitive_sum_direct,
                     ramanujan_sum, toth_rhs, toth_sum, upsilon)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_arithmetic():
    z = CyclotomicElement.root(5, 1)
    acc = CyclotomicElement.integer(1, 5)
    for j in range(1, 5):
        acc = acc + CyclotomicElement.root(5, j)
    assert acc.is_zero()  # 1 + z + z^2 + z^3 + z^4
    assert (z.times_root(4)).as_int() == 1  # z * z^4 = 1
    a = CyclotomicElement.root(3, 1)
    b = CyclotomicElement.root(6, 2)
    assert a == b  # zeta_3 = zeta_6^2 across orders


def test_group_size_and_principal(table):
    for q in (1, 2, 3, 10, 15, 30):
        group = character_group(table, q)
        assert len(group) == table.phi[q]
        chi0 = group[0]
        assert chi0.is_principal()
        for n in range(1, 2 * q + 1):
            v = chi0(n)
            if gcd(n, q) == 1:
                assert v.as_int() == 1
            else:
                assert v.is_zero()


def test_group_rejects_non_squarefree(table):
    with pytest.raises(DomainError):
        character_group(table, 4)
    with pytest.raises(DomainError):
        character_group(table, 18)


def test_multiplicativity_of_values(table):
    for q in (5, 15, 21):
        for chi in character_group(table, q):
            m = chi.order
            for a in range(1, q):
                if gcd(a, q) != 1:
                    continue
                for b in range(a, q):
                    if gcd(b, q) != 1:
                        continue
                    j = (chi.value_exponent(a) + chi.value_exponent(b)) % m
                    assert chi(a * b) == CyclotomicElement.root(m, j)


def test_orthogonality_over_units(table):
    for q in (3, 10, 21):
        for chi in character_group(table, q):
            total = CyclotomicElement.zero(1)
            for k in range(1, q + 1):
                if gcd(k, q) == 1:
                    total = total + chi(k)
            if chi.is_principal():
                assert total.as_int() == table.phi[q]
            else:
                assert total.is_zero()


def test_conductor_and_primitive_part(table):
    for q in (6, 15, 30):
        for chi in character_group(table, q):
            d = conductor(chi)
            assert q % d == 0
            star = primitive_part(chi)
            assert star.modulus == d
            assert conductor(star) == d
            # the two characters agree where both are defined
            for n in range(1, 2 * q):
                if gcd(n, q) != 1:
                    continue
                assert char_eval(chi, n) == char_eval(star, n)


def test_twisted_unit_sum_small(table):
    for q in (1, 2, 3, 6, 10, 15, 30):
        for chi in character_group(table, q):
            for n in range(0, q):
                lhs = toth_sum(table, chi, n)
                assert lhs == toth_rhs(table, chi, n)


def test_twisted_sum_direct_definition(table):
    q = 15
    for chi in character_group(table, q):
        for n in (0, 1, 4, 8):
            total = CyclotomicElement.zero(1)
            for k in range(1, q + 1):
                if gcd(k, q) == 1:
                    total = total + chi(k).scaled(
                        ramanujan_sum(table, q, k + n))
            assert total == toth_sum(table, chi, n)


def test_conjugate_sum_against_bruteforce(table):
    n_max = 40
    for q in (3, 10):
        for chi in character_group(table, q):
            for r in (1, 4, 6):
                got = upsilon(table, chi, r, n_max)
                want = CyclotomicElement.zero(1)
                for n in range(1, n_max + 1):
                    v = chi.conjugate()(n)
                    want = want + v.scaled(ramanujan_sum(table, r, n))
                assert got == want


def test_primitive_sum_formula(table):
    for d in (1, 2, 3, 30, 42):
        for a in range(1, d + 1):
            if gcd(a, d) != 1:
                continue
            assert primitive_sum(table, d, a) == \
                primitive_sum_direct(table, d, a)
    with pytest.raises(DomainError):
        primitive_sum(table, 10, 5)
    with pytest.raises(DomainError):
        primitive_sum_direct(table, 12, 1)  # 12 not squarefree
