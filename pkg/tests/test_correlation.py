import math
from fractions import Fraction
from math import gcd

import pytest

from ramcorr import (DomainError, corr_lambda_lambda, corr_lambda_lambdaN,
                     corr_tail, d_n_sum, delta_direct, delta_form1,
                     delta_form2, delta_report, delta_trend, delta_via_corr,
                     deviation, expansion_rhs, hl_experiment,
                     lambda_incomplete, phi_sum, psi_apc, ramanujan_sum,
                     remainder_r, s_sum, singular_series_euler,
                     singular_series_truncated, t_sum)


def test_psi_matches_direct_sum(table):
    for q in (1, 3, 8, 12):
        for k in range(1, q + 1):
            for n_max in (10, 57, 200):
                want = math.fsum(table.von_mangoldt(n).evaluate()
                                 for n in range(1, n_max + 1)
                                 if n % q == k % q)
                got = psi_apc(table, n_max, q, k)
                assert got == pytest.approx(want, abs=1e-10)
                f = psi_apc(table, n_max, q, k, "exact")
                assert f.evaluate() == pytest.approx(want, abs=1e-10)


def test_deviation_values(table):
    # phi(q) * deviation is an integer
    for q in (1, 2, 12, 30):
        for h in (0, 1, 5):
            for k in range(1, q + 1):
                if gcd(k, q) != 1:
                    continue
                d = deviation(table, h, q, k)
                want = Fraction(ramanujan_sum(table, q, k + h)) - \
                    Fraction(table.mu[q] * ramanujan_sum(table, q, h),
                             table.phi[q])
                assert d == want
                assert (d * table.phi[q]).denominator == 1


def test_autocorrelation_direct(table):
    for n_max in (10, 40, 100):
        for h in (0, 1, 2, 6):
            vm = table.vm_np
            want = math.fsum(vm[n] * vm[n + h]
                             for n in range(1, n_max + 1))
            got = corr_lambda_lambda(table, n_max, h)
            assert got == pytest.approx(want, abs=1e-10)
            f = corr_lambda_lambda(table, n_max, h, "exact")
            assert f.evaluate() == pytest.approx(want, abs=1e-10)


def test_mixed_correlation_direct(table):
    for n_max in (10, 40, 100):
        for h in (0, 1, 2, 6):
            want = math.fsum(
                table.vm_np[n] *
                lambda_incomplete(table, n_max, n + h, "float")
                for n in range(1, n_max + 1))
            got = corr_lambda_lambdaN(table, n_max, h)
            assert got == pytest.approx(want, abs=1e-9)
            f = corr_lambda_lambdaN(table, n_max, h, "exact")
            assert f.evaluate() == pytest.approx(want, abs=1e-9)


def test_tail_identity_small(table):
    for n_max in (10, 30, 80):
        for h in (0, 1, 2, 7, 11):
            lhs = corr_lambda_lambda(table, n_max, h, "exact")
            rhs = corr_lambda_lambdaN(table, n_max, h, "exact") - \
                corr_tail(table, n_max, h, "exact")
            assert lhs == rhs, (n_max, h)


def test_four_routes_exact_small(table):
    for n_max in (8, 12, 16):
        for h in (1, 2, 3, 6):
            a = delta_direct(table, n_max, h, "exact")
            b = delta_via_corr(table, n_max, h, "exact")
            c = delta_form1(table, n_max, h, "exact")
            d = delta_form2(table, n_max, h, "exact")
            assert a == b == c == d, (n_max, h)


def test_four_routes_float_small(table):
    for n_max in (12, 30):
        for h in (1, 2, 5):
            ref = delta_direct(table, n_max, h)
            for fn in (delta_via_corr, delta_form1, delta_form2):
                got = fn(table, n_max, h)
                assert got == pytest.approx(ref, rel=1e-9, abs=1e-9)


def test_shift_zero_and_tiny_truncation(table):
    # at shift 0 every deviation term on the units vanishes
    for n_max in (2, 10, 33):
        assert delta_direct(table, n_max, 0, "exact").is_zero()
    # truncation 2 leaves only the two degenerate moduli
    for h in range(0, 6):
        assert delta_direct(table, 2, h, "exact").is_zero()


def test_centered_variant_is_identical(table):
    for n_max in (12, 25):
        for h in (1, 4):
            a = delta_direct(table, n_max, h, "exact")
            b = delta_direct(table, n_max, h, "exact", centered=True)
            assert a == b


def test_prime_modulus_terms_vanish(table):
    for n_max in (12, 30, 60):
        for h in (1, 2, 6):
            full = remainder_r(table, n_max, h, "exact")
            comp = remainder_r(table, n_max, h, "exact",
                               composite_only=True)
            assert full == comp


def test_progression_pair_sum_representations(table):
    # the function itself asserts the k-side equals the n-side
    for q, r in ((1, 1), (3, 4), (4, 3), (5, 6), (12, 7)):
        for h in (0, 1, 3):
            for n_max in (15, 44):
                d_n_sum(table, n_max, h, q, r)
    with pytest.raises(DomainError):
        d_n_sum(table, 30, 1, 6, 9)  # moduli share a factor


def test_pair_sum_factored_form(table):
    for q in (3, 5, 6, 15, 21):
        for r in (1, 2, 4):
            if gcd(q, r) != 1:
                continue
            for h in (1, 2, 9):
                t = gcd(q, h)
                lhs = d_n_sum(table, 50, h, q, r)
                rhs = Fraction(
                    table.mu[t] * table.phi[t] *
                    phi_sum(table, 50, h, q, r, "divisors"),
                    table.phi[q])
                assert lhs == rhs, (q, r, h)


def test_phi_sum_routes_agree(table):
    # the decomposition holds for any weight modulus r, coprime or not
    for q in (3, 6, 10, 15, 30):
        for r in (1, 3, 7, 10):
            for h in (1, 2, 6, 10):
                a = phi_sum(table, 40, h, q, r, "divisors")
                b = phi_sum(table, 40, h, q, r, "characters")
                assert a == b, (q, r, h)
                assert phi_sum(table, 40, h, q, r) == a  # default both


def test_phi_sum_rejects_bad_modulus(table):
    with pytest.raises(DomainError):
        phi_sum(table, 40, 2, 12, 5)  # 12 not squarefree
    with pytest.raises(ValueError):
        phi_sum(table, 40, 2, 15, 2, route="sideways")


def test_t_sum_direct(table):
    for q, r in ((3, 4), (5, 2), (8, 3)):
        for h in (1, 2, 5):
            for m in (1, 2, 3, 6):
                want = sum(ramanujan_sum(table, r, n)
                           for n in range(1, 61)
                           if gcd(n, q) == 1 and (n + h) % m == 0)
                assert t_sum(table, 60, h, m, q, r) == want


def test_expansion_side_float_matches_exact(table):
    for n_max in (12, 40):
        for h in (1, 3):
            f = expansion_rhs(table, n_max, h, "exact")
            v = expansion_rhs(table, n_max, h, "float")
            assert v == pytest.approx(f.evaluate(), rel=1e-10, abs=1e-10)


def test_singular_series(bigtable):
    tr = singular_series_truncated(bigtable, 2, 10 ** 4)
    eu = singular_series_euler(1, 10 ** 6)
    assert abs(tr - eu) < 1e-2
    assert eu == pytest.approx(1.3203236, abs=2e-4)
    # odd shifts collapse
    for h in (1, 3, 5):
        assert abs(singular_series_truncated(bigtable, h, 10 ** 4)) < 0.05
    # scaling by the odd prime factors of k
    eu6 = singular_series_euler(3, 10 ** 5)
    assert eu6 == pytest.approx(singular_series_euler(1, 10 ** 5) * 2,
                                rel=1e-9)


def test_delta_report_consistency(table):
    rep = delta_report(table, 30, 2, "float")
    assert rep.N == 30 and rep.h == 2 and rep.mode == "float"
    assert rep.delta_direct == pytest.approx(delta_direct(table, 30, 2))
    assert rep.max_pairwise_discrepancy < 1e-9 * (1 + abs(rep.delta_direct))
    assert rep.corr == pytest.approx(corr_lambda_lambdaN(table, 30, 2))
    assert rep.delta_via_corr == pytest.approx(
        rep.corr - rep.expansion_rhs - rep.remainder_r, abs=1e-9)


def test_delta_trend_points(table):
    pts = delta_trend(table, [10, 20, 40], 3, "float")
    assert [p.N for p in pts] == [10, 20, 40]
    for p in pts:
        assert p.h == 3
        assert p.delta_over_N == pytest.approx(p.delta / p.N)
        assert p.delta == pytest.approx(delta_direct(table, p.N, 3))


def test_density_experiment_shape(table):
    rep = hl_experiment(table, 2000, 1, 300, 5000)
    assert rep.N == 2000 and rep.k == 1 and rep.h == 2
    assert rep.Q == 300 and rep.prime_bound == 5000
    assert rep.corr_over_N == pytest.approx(
        corr_lambda_lambda(table, 2000, 2) / 2000)
    assert rep.singular_truncated == pytest.approx(
        singular_series_truncated(table, 2, 300))
    assert rep.singular_euler == pytest.approx(
        singular_series_euler(1, 5000))
    assert 0.9 < rep.corr_over_N < 1.8
