"""The truncated von Mangoldt function and its finite expansion.

Lambda_N(n) = - sum over d | n, d <= N of mu(d) log d agrees with
Lambda(n) for n <= N and admits the exact finite expansion

    Lambda_N(n) = sum over q <= N of  w_N(q) c_q(n),
    w_N(q) = -(mu(q)/q) sum over d <= N/q, gcd(d, q) = 1
             of mu(d) log(dq) / d,

with w_N(q) = 0 off squarefree q.  Everything here is available in two
evaluation modes: ``exact`` returns LogForm elements, ``float`` goes
through fast numeric paths that never build forms.

``coprime_coefficients`` computes the variant coefficients with the
summation restricted to d coprime to an auxiliary modulus q; those are
what the reformulations of the correlation deviation actually need when
the outer modulus is fixed (restricting n to units mod q restricts the
divisors d that can appear, and the unrestricted coefficients do not
reproduce Lambda on that set).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .logforms import LogForm, form_sum
from .ramanujan import ramanujan_matrix, ramanujan_sum
from .sieve import ArithTable

MODES = ("exact", "float")


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


# -- the truncated function itself -----------------------------------


def lambda_incomplete(table: ArithTable, trunc: int, n: int,
                      mode: str = "float"):
    """Lambda_trunc(n) = - sum over squarefree d | n, d <= trunc of
    mu(d) log d.  Exact results are memoised on the table.

    n = 0 is allowed: every d divides 0, so the sum runs over all
    squarefree d <= trunc (the expansion identity covers that case).
    """
    _check_mode(mode)
    if n != 0:
        table.check(n)
    table.check(trunc, "truncation")
    if n == 0:
        divs = [d for d in range(1, trunc + 1) if table.mu[d]]
    else:
        divs = [d for d in table.squarefree_divisors(n) if d <= trunc]
    if mode == "exact":
        key = ("lamN", trunc, n)
        got = table.memo.get(key)
        if got is None:
            got = form_sum(table.log_form(d).scale(-table.mu[d])
                           for d in divs)
            table.memo[key] = got
        return got
    # group by prime so that structural cancellation gives a hard zero
    coef: dict[int, int] = {}
    for d in divs:
        if d == 1:
            continue
        for p, _ in table.factorize(d):
            coef[p] = coef.get(p, 0) - table.mu[d]
    return math.fsum(c * math.log(p) for p, c in sorted(coef.items()) if c)


def lambda_incomplete_row(table: ArithTable, trunc: int,
                          n_max: int) -> np.ndarray:
    """Float Lambda_trunc(n) for all 0 <= n <= n_max at once, by looping
    over d and hitting its multiples (the definition, transposed)."""
    table.check(trunc, "truncation")
    lam = np.zeros(n_max + 1)
    mu = table.mu
    for d in range(2, trunc + 1):
        if mu[d]:
            lam[::d] -= mu[d] * math.log(d)
    return lam


# -- expansion coefficients ------------------------------------------


def wintner_lambda_coeff(table: ArithTable, trunc: int, q: int, mode: str = "float"):
    """w_trunc(q); zero for non-squarefree q and for q > trunc."""
    _check_mode(mode)
    table.check(q, "modulus q")
    table.check(trunc, "truncation")
    if q > trunc or table.mu[q] == 0:
        return LogForm.zero() if mode == "exact" else 0.0
    mu = table.mu
    if mode == "exact":
        return form_sum(
            table.log_form(d * q).scale(Fraction(-mu[q] * mu[d], q * d))
            for d in range(1, trunc // q + 1)
            if mu[d] and gcd(d, q) == 1)
    s = math.fsum(mu[d] * math.log(d * q) / d
                  for d in range(1, trunc // q + 1)
                  if mu[d] and gcd(d, q) == 1)
    return -mu[q] / q * s


def coefficients_float(table: ArithTable, trunc: int) -> np.ndarray:
    """All w_trunc(q) for q <= trunc as a float array (index = q)."""
    table.check(trunc, "truncation")
    mu = table.mu_np
    n = np.arange(trunc + 1)
    logs = np.zeros(trunc + 1)
    logs[1:] = np.log(n[1:])
    inv = np.zeros(trunc + 1)
    inv[1:] = 1.0 / n[1:]
    w = np.zeros(trunc + 1)
    for q in range(1, trunc + 1):
        if mu[q] == 0:
            continue
        k = trunc // q
        d = n[1:k + 1]
        keep = (np.gcd(d, q) == 1) & (mu[1:k + 1] != 0)
        s = float(np.sum((mu[1:k + 1] * (logs[1:k + 1] + logs[q]) * inv[1:k + 1])[keep]))
        w[q] = -mu[q] / q * s
    return w


@dataclass
class WintnerCoefficients:
    """Coefficient family of one truncation, in one evaluation mode."""

    trunc: int
    mode: str
    forms: dict[int, LogForm] | None = None
    values: np.ndarray | None = None

    def __getitem__(self, q: int):
        if not 1 <= q <= self.trunc:
            raise ValueError(f"q = {q} outside [1, {self.trunc}]")
        if self.mode == "exact":
            return self.forms.get(q, LogForm.zero())
        return float(self.values[q])

    def items(self):
        if self.mode == "exact":
            return sorted(self.forms.items())
        return [(q, float(self.values[q]))
                for q in range(1, self.trunc + 1) if self.values[q]]


def wintner_coefficients(table: ArithTable, trunc: int,
                         mode: str = "float") -> WintnerCoefficients:
    _check_mode(mode)
    if mode == "exact":
        forms = {}
        for q in range(1, trunc + 1):
            if table.mu[q]:
                f = wintner_lambda_coeff(table, trunc, q, "exact")
                if f:
                    forms[q] = f
        return WintnerCoefficients(trunc, mode, forms=forms)
    return WintnerCoefficients(trunc, mode,
                               values=coefficients_float(table, trunc))


def coprime_coefficients(table: ArithTable, trunc: int, q: int,
                         mode: str = "float") -> dict:
    """Restricted coefficients w^(q)_trunc(r) for every squarefree
    r <= trunc with gcd(r, q) = 1:

        w^(q)_trunc(r) = - sum over d <= trunc, gcd(d, q) = 1, r | d
                         of mu(d) log d / d.

    On integers coprime to q these reproduce Lambda_trunc:
    Lambda_trunc(n) = sum_r w^(q)(r) c_r(n) whenever gcd(n, q) = 1.
    Returned as a dict r -> LogForm or float.
    """
    _check_mode(mode)
    table.check(trunc, "truncation")
    mu = table.mu
    zero = LogForm.zero() if mode == "exact" else 0.0
    out = {r: zero for r in range(1, trunc + 1)
           if mu[r] and gcd(r, q) == 1}
    for d in range(1, trunc + 1):
        if mu[d] == 0 or gcd(d, q) != 1:
            continue
        if mode == "exact":
            term = table.log_form(d).scale(Fraction(-mu[d], d))
            if not term:
                continue
        else:
            term = -mu[d] * math.log(d) / d
            if d == 1:
                continue
        for r in table.squarefree_divisors(d):
            out[r] = out[r] + term
    return out


def wintner_coeff_coprime(table: ArithTable, trunc: int, q: int, r: int,
                          mode: str = "float"):
    """Single restricted coefficient, by the direct e-sum
    -(mu(r)/r) sum over e <= trunc/r, gcd(e, qr) = 1 of mu(e) log(er)/e."""
    _check_mode(mode)
    table.check(r, "modulus r")
    if table.mu[r] == 0 or gcd(r, q) != 1:
        return LogForm.zero() if mode == "exact" else 0.0
    mu = table.mu
    qr = q * r
    if mode == "exact":
        return form_sum(
            table.log_form(e * r).scale(Fraction(-mu[r] * mu[e], r * e))
            for e in range(1, trunc // r + 1)
            if mu[e] and gcd(e, qr) == 1)
    s = math.fsum(mu[e] * math.log(e * r) / e
                  for e in range(1, trunc // r + 1)
                  if mu[e] and gcd(e, qr) == 1)
    return -mu[r] / r * s


# -- evaluating the expansion ----------------------------------------


def finite_expansion_eval(table: ArithTable, trunc: int, n: int,
                          mode: str = "float",
                          coeffs: WintnerCoefficients | None = None):
    """sum over q <= trunc of w_trunc(q) c_q(n), the expansion side of
    the identity with Lambda_trunc(n)."""
    _check_mode(mode)
    if coeffs is None:
        coeffs = wintner_coefficients(table, trunc, mode)
    if coeffs.trunc != trunc or coeffs.mode != mode:
        raise ValueError("coefficient family does not match trunc/mode")
    if mode == "exact":
        return form_sum(
            w.scale(ramanujan_sum(table, q, n))
            for q, w in coeffs.forms.items())
    return math.fsum(float(coeffs.values[q]) * ramanujan_sum(table, q, n)
                     for q in range(1, trunc + 1) if coeffs.values[q])


def expansion_row(table: ArithTable, trunc: int, n_max: int,
                  mode: str = "float"):
    """The expansion sum at every 0 <= n <= n_max.

    Exact mode clears denominators: every coefficient of log p in every
    w_trunc(q) is an integer over lcm(1..trunc)^2, so the q-sum runs in
    integer arithmetic per prime and the results are reassembled into
    LogForms at the end.  Float mode is one matrix product against the
    closed-form c_q(n) table.  Returns a list of LogForms or an ndarray.
    """
    _check_mode(mode)
    if mode == "float":
        w = coefficients_float(table, trunc)
        c = ramanujan_matrix(table, trunc, n_max).astype(float)
        return w[1:] @ c[1:]
    big = math.lcm(*range(1, trunc + 1)) ** 2
    c = ramanujan_matrix(table, trunc, n_max)
    rows = {q: [int(x) for x in c[q]] for q in range(1, trunc + 1)
            if table.mu[q]}
    acc: dict[int, list[int]] = {}
    for q in range(1, trunc + 1):
        if table.mu[q] == 0:
            continue
        w = wintner_lambda_coeff(table, trunc, q, "exact")
        if w.const or w.bil:
            raise AssertionError("coefficient has unexpected terms")
        row = rows[q]
        for p, frac in w.lin:
            scaled = frac * big
            if scaled.denominator != 1:
                raise AssertionError("lcm^2 does not clear the denominator")
            wint = scaled.numerator
            slot = acc.get(p)
            if slot is None:
                acc[p] = [wint * x for x in row]
            else:
                acc[p] = [a + wint * x for a, x in zip(slot, row)]
    out = []
    for n in range(n_max + 1):
        lin = {p: Fraction(col[n], big) for p, col in acc.items() if col[n]}
        out.append(LogForm._build(Fraction(0), lin, {}))
    return out


# -- general Wintner machinery ---------------------------------------


def _as_callable(f):
    return f if callable(f) else (lambda n: f[n])


def wintner_coeff_truncated(table: ArithTable, f, q: int, m_terms: int,
                            mode: str = "float"):
    """Truncated Wintner coefficient of an arbitrary arithmetic f:

        (1/q) sum over m <= m_terms of (mu * f)(mq) / m,

    where * is Dirichlet convolution.  ``f`` may be a callable or an
    indexable sequence covering [1, q*m_terms]."""
    _check_mode(mode)
    table.check(q * m_terms, "q * m_terms")
    fv = _as_callable(f)

    def conv(n: int):
        terms = [table.mu[d] * fv(n // d) for d in table.divisors(n)
                 if table.mu[d]]
        return sum(terms) if mode == "exact" else math.fsum(terms)

    if mode == "exact":
        return sum(Fraction(1, m) * conv(m * q)
                   for m in range(1, m_terms + 1)) / q
    return math.fsum(conv(m * q) / m for m in range(1, m_terms + 1)) / q


def wintner_partial_sum(table: ArithTable, f, m_terms: int) -> float:
    """sum over n <= m_terms of |(mu * f)(n)| / n; the Wintner
    convergence gauge for f."""
    table.check(m_terms, "m_terms")
    fv = _as_callable(f)
    out = []
    for n in range(1, m_terms + 1):
        c = math.fsum(table.mu[d] * fv(n // d) for d in table.divisors(n)
                      if table.mu[d])
        out.append(abs(c) / n)
    return math.fsum(out)


def delange_partial_sum(table: ArithTable, n_corr: int, m_terms: int,
                        mode: str = "float") -> float:
    """Partial sums of the Delange majorant for the shifted-correlation
    expansion:  sum over m <= m_terms of
    (2^omega(m) / m) |sum over d | m of mu(d) corr(n_corr, m/d)|.

    Nondecreasing in m_terms by construction.
    """
    _check_mode(mode)
    from .correlation import corr_lambda_lambdaN
    cache: dict[int, float] = {}

    def corr_at(j: int) -> float:
        v = cache.get(j)
        if v is None:
            v = corr_lambda_lambdaN(table, n_corr, j, mode)
            if mode == "exact":
                v = v.evaluate()
            cache[j] = v
        return v

    total = []
    for m in range(1, m_terms + 1):
        inner = math.fsum(table.mu[d] * corr_at(m // d)
                          for d in table.divisors(m) if table.mu[d])
        total.append(2 ** table.omega(m) / m * abs(inner))
    return math.fsum(total)


def delange_partial_sums(table: ArithTable, n_corr: int, m_max: int,
                         mode: str = "float") -> list[float]:
    """All the partial sums M = 1..m_max at once, sharing one
    correlation cache.  Entry M-1 equals delange_partial_sum(.., M)."""
    _check_mode(mode)
    from .correlation import corr_lambda_lambdaN
    cache: dict[int, float] = {}

    def corr_at(j: int) -> float:
        v = cache.get(j)
        if v is None:
            v = corr_lambda_lambdaN(table, n_corr, j, mode)
            if mode == "exact":
                v = v.evaluate()
            cache[j] = v
        return v

    terms: list[float] = []
    out: list[float] = []
    for m in range(1, m_max + 1):
        inner = math.fsum(table.mu[d] * corr_at(m // d)
                          for d in table.divisors(m) if table.mu[d])
        terms.append(2 ** table.omega(m) / m * abs(inner))
        out.append(math.fsum(terms))
    return out
