"""Ramanujan sums, finite Ramanujan expansions of the von Mangoldt
function, and shifted-correlation deviations, with exact symbolic and
float numeric evaluation modes."""

from .cyclotomic import CyclotomicElement, cyclotomic_poly
from .characters import (DirichletCharacter, char_eval, character_group,
                         conductor, index_table, primitive_part,
                         primitive_root, primitive_sum,
                         primitive_sum_direct, toth_rhs, toth_sum, upsilon)
from .correlation import (DeltaReport, HLReport, TrendPoint,
                          corr_lambda_lambda, corr_lambda_lambdaN,
                          corr_tail, d_n_sum, delta_direct, delta_form1,
                          delta_form2, delta_report, delta_trend,
                          delta_via_corr, deviation, expansion_rhs,
                          hl_experiment, phi_sum, psi_apc, remainder_r,
                          singular_series_euler, singular_series_truncated,
                          t_sum)
from .errors import DegreeError, DomainError, NumericError, SieveRangeError
from .expansion import (WintnerCoefficients, coprime_coefficients,
                        delange_partial_sum, finite_expansion_eval,
                        lambda_incomplete, lambda_incomplete_row,
                        wintner_lambda_coeff, wintner_coeff_coprime,
                        wintner_coeff_truncated, wintner_coefficients,
                        wintner_partial_sum)
from .logforms import (LogForm, form_sum, lf_add, lf_eval, lf_is_zero,
                       lf_log, lf_mul, lf_scale)
from .ramanujan import (RamanujanContext, brauer_rademacher, bruteforce_row,
                        cohen_mean, crt_solution, ramanujan_matrix,
                        ramanujan_sum, ramanujan_sum_bruteforce,
                        residue_count, s_sum, s_sum_closed,
                        truncated_orthogonality)
from .sieve import (ArithTable, build_sieve, factorize, is_squarefree,
                    omega_fn, tau_fn, v_p, von_mangoldt)
from .verify import CheckResult, run_suites

__version__ = "0.1.0"

__all__ = [
    "ArithTable", "build_sieve", "factorize", "omega_fn", "tau_fn",
    "v_p", "is_squarefree", "von_mangoldt",
    "LogForm", "form_sum", "lf_log", "lf_add", "lf_scale", "lf_mul",
    "lf_eval", "lf_is_zero", "RamanujanContext",
    "CyclotomicElement", "cyclotomic_poly",
    "DirichletCharacter", "character_group", "primitive_root",
    "index_table", "char_eval", "conductor", "primitive_part",
    "toth_sum", "toth_rhs", "upsilon",
    "primitive_sum", "primitive_sum_direct",
    "CheckResult", "run_suites",
    "ramanujan_sum", "ramanujan_sum_bruteforce", "bruteforce_row",
    "ramanujan_matrix", "cohen_mean", "brauer_rademacher",
    "residue_count", "s_sum", "s_sum_closed", "crt_solution",
    "truncated_orthogonality",
    "lambda_incomplete", "lambda_incomplete_row", "wintner_lambda_coeff",
    "wintner_coefficients", "WintnerCoefficients", "coprime_coefficients",
    "wintner_coeff_coprime", "finite_expansion_eval",
    "wintner_coeff_truncated", "wintner_partial_sum", "delange_partial_sum",
    "psi_apc", "deviation", "corr_lambda_lambda", "corr_lambda_lambdaN",
    "corr_tail", "delta_direct", "delta_via_corr", "expansion_rhs",
    "remainder_r", "d_n_sum", "t_sum", "phi_sum", "delta_form1",
    "delta_form2", "singular_series_truncated", "singular_series_euler",
    "delta_report", "DeltaReport", "delta_trend", "TrendPoint",
    "hl_experiment", "HLReport",
    "SieveRangeError", "DomainError", "DegreeError", "NumericError",
]
