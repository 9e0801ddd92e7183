import pytest

from ramcorr.verify import (CheckResult, run_suites, suite_characters,
                            suite_delta, suite_expansion, suite_ramanujan,
                            suite_s_sum)


def test_small_suites_all_pass(table):
    results = suite_ramanujan(table, q_max=40, n_max=40, prop_max=60,
                              ortho_max=6)
    results += suite_characters(table, q_max=20, d_max=30)
    results += suite_expansion(table, trunc_exact=10, n_exact=40,
                               trunc_float=30, n_float=120,
                               delange_m=15)
    results += suite_delta(table, n_top=12, h_max=3)
    results += suite_s_sum(table, pair_max=8, prop_pair_max=6)
    assert results
    for r in results:
        assert r.passed, r.line()


def test_line_formats():
    ok = CheckResult("ramanujan", "oracle equivalence", True, 65536)
    assert ok.line() == "[ramanujan] oracle equivalence 65536/65536 pass"
    bad = CheckResult("delta", "four routes", False, 12, "N=10 h=2: gap")
    assert "FAIL" in bad.line() and "N=10 h=2" in bad.line()
    info = CheckResult("s_sum", "size ratio", True, 9, "max 0.4",
                       observational=True)
    assert "info" in info.line() and "FAIL" not in info.line()


def test_dispatch_by_name(table):
    got = run_suites(table, ["expansion"], trunc_exact=6, n_exact=20,
                     trunc_float=12, n_float=40, delange_m=8)
    assert got and all(r.suite == "expansion" for r in got)
    both = run_suites(table, ["ramanujan", "s_sum"], q_max=20, n_max=20,
                      prop_max=30, ortho_max=4, pair_max=6,
                      prop_pair_max=4)
    assert {r.suite for r in both} == {"ramanujan", "s_sum"}
    with pytest.raises(ValueError):
        run_suites(table, ["nonsense"])


def test_all_runs_every_suite(table):
    got = run_suites(table, ["all"], q_max=12, n_max=12, prop_max=16,
                     ortho_max=3, d_max=10, trunc_exact=5, n_exact=12,
                     trunc_float=8, n_float=20, delange_m=5, n_top=8,
                     h_max=2, pair_max=4, prop_pair_max=3)
    assert {r.suite for r in got} == {"ramanujan", "characters",
                                     "expansion", "delta", "s_sum"}


def test_tolerance_knob_forces_failure(table):
    got = suite_ramanujan(table, q_max=8, n_max=8, prop_max=10,
                          ortho_max=4, tolerance=1e-15)
    failed = [r for r in got if not r.passed]
    assert failed and all("orthogonality" in r.name for r in failed)
    assert failed[0].detail  # counterexample carried
