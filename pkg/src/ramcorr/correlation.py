"""Shifted correlations of the von Mangoldt function and the deviation
Delta(N, h), computed along four independent routes.

With psi(N; q, k) the Lambda-count in the progression k mod q and

    dev(h; q, k) = c_q(k + h) - mu(q) c_q(h) / phi(q),

the deviation is

    Delta(N, h) = sum over q <= N of w_N(q)
                  sum over k in (Z/qZ)* of psi(N; q, k) dev(h; q, k).

Routes implemented:

  delta_direct    the definition above;
  delta_via_corr  corr(Lambda, Lambda_N) minus the expansion main term
                  minus the non-coprime remainder R(N, h);
  delta_form1     outer moduli q >= 3, inner sum over coprime r of the
                  restricted coefficients w^(q)(r) against
                  D_N(h; q, r) = sum_k S_N(q, k; r) dev(h; q, k);
  delta_form2     form1 with D_N factored through gcd(q, h) = t into
                  integer character sums Phi_{N,h}(q, r), evaluated by
                  divisor-weighted progression sums T_{N,h}(m; q, r).

Exact mode keeps LogForm values throughout; float mode uses numpy
tables and compensated scalar accumulation.  The four results agree
exactly in exact mode and to ~1e-9 relative in float mode.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .cyclotomic import CyclotomicElement
from .errors import DomainError
from .expansion import (MODES, _check_mode, coprime_coefficients,
                        lambda_incomplete, lambda_incomplete_row,
                        wintner_coefficients)
from .logforms import LogForm, form_sum
from .ramanujan import ramanujan_matrix, ramanujan_sum, s_sum
from .sieve import ArithTable

_F0 = Fraction(0)


# -- cached coefficient families -------------------------------------


def _wintner_cached(table: ArithTable, trunc: int, mode: str):
    key = ("wcoef", trunc, mode)
    got = table.memo.get(key)
    if got is None:
        got = wintner_coefficients(table, trunc, mode)
        table.memo[key] = got
    return got


def _coprime_cached(table: ArithTable, trunc: int, q: int, mode: str):
    key = ("copc", trunc, q, mode)
    got = table.memo.get(key)
    if got is None:
        got = coprime_coefficients(table, trunc, q, mode)
        table.memo[key] = got
    return got


# -- progression Lambda-counts and the deviation ---------------------


def psi_apc(table: ArithTable, n_max: int, q: int, k: int,
            mode: str = "float"):
    """sum of Lambda(n) over n <= n_max with n = k (mod q)."""
    _check_mode(mode)
    table.check(n_max, "n_max")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    k0 = k % q
    if mode == "float":
        vm = table.vm_np[:n_max + 1]
        return float(vm[k0::q].sum())
    parts = []
    for pk, p in table.prime_powers:
        if pk > n_max:
            break
        if pk % q == k0:
            parts.append(LogForm.log_prime(p))
    return form_sum(parts)


def _psi_by_residue(table: ArithTable, n_max: int, q: int, mode: str):
    """psi(n_max; q, k) for every residue k, one pass over prime powers."""
    if mode == "float":
        vm = table.vm_np[:n_max + 1]
        return [float(vm[r::q].sum()) for r in range(q)]
    counts: list[dict[int, int]] = [dict() for _ in range(q)]
    for pk, p in table.prime_powers:
        if pk > n_max:
            break
        d = counts[pk % q]
        d[p] = d.get(p, 0) + 1
    return [LogForm._build(_F0, {p: Fraction(c) for p, c in d.items()}, {})
            for d in counts]


def deviation(table: ArithTable, h: int, q: int, k: int) -> Fraction:
    """c_q(k + h) - mu(q) c_q(h) / phi(q), exactly."""
    return (ramanujan_sum(table, q, k + h)
            - Fraction(table.mu[q] * ramanujan_sum(table, q, h),
                       table.phi[q]))


# -- correlations ----------------------------------------------------


def corr_lambda_lambda(table: ArithTable, n_max: int, h: int,
                       mode: str = "float"):
    """Autocorrelation sum over n <= n_max of Lambda(n) Lambda(n + h)."""
    _check_mode(mode)
    table.check(n_max, "n_max")
    if h < 0:
        raise ValueError(f"shift h must be >= 0, got {h}")
    table.check(n_max + h, "n_max + h")
    if mode == "float":
        vm = table.vm_np
        return float(vm[1:n_max + 1] @ vm[1 + h:n_max + h + 1])
    parts = []
    for pk, p in table.prime_powers:
        if pk > n_max:
            break
        other = table.von_mangoldt(pk + h)
        if other:
            parts.append(LogForm.log_prime(p) * other)
    return form_sum(parts)


def corr_lambda_lambdaN(table: ArithTable, n_max: int, h: int,
                         mode: str = "float"):
    """Mixed correlation sum over n <= n_max of
    Lambda(n) Lambda_{n_max}(n + h)."""
    _check_mode(mode)
    table.check(n_max, "n_max")
    if h < 0:
        raise ValueError(f"shift h must be >= 0, got {h}")
    table.check(n_max + h, "n_max + h")
    if mode == "float":
        vm = table.vm_np
        lam = lambda_incomplete_row(table, n_max, n_max + h)
        return float(vm[1:n_max + 1] @ lam[1 + h:n_max + h + 1])
    parts = []
    for pk, p in table.prime_powers:
        if pk > n_max:
            break
        other = lambda_incomplete(table, n_max, pk + h, "exact")
        if other:
            parts.append(LogForm.log_prime(p) * other)
    return form_sum(parts)


def corr_tail(table: ArithTable, n_max: int, h: int, mode: str = "float"):
    """Boundary term linking the two correlations:

        sum over n_max < d <= n_max + h of mu(d) log d
        times psi(n_max; d, -h).

    Since d > n_max the progression holds at most one n, namely
    (-h mod d) when it lands in [1, n_max].  The exact tail identity is
    corr_lambda_lambda = corr_lambda_lambdaN - corr_tail.
    """
    _check_mode(mode)
    table.check(n_max, "n_max")
    if h < 0:
        raise ValueError(f"shift h must be >= 0, got {h}")
    if h:
        table.check(n_max + h, "n_max + h")
    exact = mode == "exact"
    parts = []
    for d in range(n_max + 1, n_max + h + 1):
        if table.mu[d] == 0:
            continue
        n0 = (-h) % d
        if not 1 <= n0 <= n_max:
            continue
        if exact:
            v = table.von_mangoldt(n0)
            if v:
                parts.append(table.log_form(d).scale(table.mu[d]) * v)
        else:
            lam = table.vm_np[n0]
            if lam:
                parts.append(table.mu[d] * math.log(d) * lam)
    return form_sum(parts) if exact else math.fsum(parts)


# -- route 1: the definition -----------------------------------------


def delta_direct(table: ArithTable, n_max: int, h: int,
                 mode: str = "float", centered: bool = False):
    """Delta(n_max, h) straight from the definition.

    ``centered`` subtracts from psi its mean over the units mod q; the
    deviation factors sum to zero over k, so the result is unchanged
    (that invariance is part of the test suite).
    """
    _check_mode(mode)
    table.check(n_max, "n_max")
    coeffs = _wintner_cached(table, n_max, mode)
    mu, phi = table.mu, table.phi
    out = []
    for q in range(1, n_max + 1):
        if mu[q] == 0:
            continue
        w = coeffs[q]
        if not w:
            continue
        psi = _psi_by_residue(table, n_max, q, mode)
        units = [k for k in range(1, q + 1) if gcd(k, q) == 1]
        if mode == "exact":
            if centered:
                mean = form_sum(psi[k % q] for k in units).scale(
                    Fraction(1, phi[q]))
            inner_parts = []
            for k in units:
                pk = psi[k % q]
                if centered:
                    pk = pk - mean
                dev = deviation(table, h, q, k)
                if dev and pk:
                    inner_parts.append(pk.scale(dev))
            inner = form_sum(inner_parts)
            if inner:
                out.append(w * inner)
        else:
            cqh = ramanujan_sum(table, q, h)
            mean = (math.fsum(psi[k % q] for k in units) / phi[q]
                    if centered else 0.0)
            inner = math.fsum(
                (psi[k % q] - mean)
                * (ramanujan_sum(table, q, k + h) - mu[q] * cqh / phi[q])
                for k in units)
            out.append(w * inner)
    return form_sum(out) if mode == "exact" else math.fsum(out)


# -- route 2: through the mixed correlation --------------------------


def expansion_rhs(table: ArithTable, n_max: int, h: int,
                  mode: str = "float"):
    """Main term of the expansion of the mixed correlation:

        sum over q <= n_max of w(q) c_q(h) / phi(q)
        times sum over n <= n_max of Lambda(n) c_q(n).
    """
    _check_mode(mode)
    table.check(n_max, "n_max")
    coeffs = _wintner_cached(table, n_max, mode)
    mu, phi = table.mu, table.phi
    if mode == "exact":
        parts = []
        for q in range(1, n_max + 1):
            if mu[q] == 0:
                continue
            w = coeffs[q]
            cqh = ramanujan_sum(table, q, h)
            if not w or cqh == 0:
                continue
            inner = []
            for pk, p in table.prime_powers:
                if pk > n_max:
                    break
                c = ramanujan_sum(table, q, pk)
                if c:
                    inner.append(LogForm.log_prime(p, c))
            t = form_sum(inner)
            if t:
                parts.append((w * t).scale(Fraction(cqh, phi[q])))
        return form_sum(parts)
    # float fast path: Lambda is supported on prime powers, and for
    # squarefree q the value c_q(p^a) depends only on whether p | q,
    # so the inner sum collapses to psi(n_max) plus one correction per
    # prime dividing q.
    vm = table.vm_np
    psi_full = float(vm[1:n_max + 1].sum())
    lmass: dict[int, float] = {}
    for p in table.primes:
        if p > n_max:
            break
        cnt = 0
        pk = p
        while pk <= n_max:
            cnt += 1
            pk *= p
        lmass[p] = cnt * math.log(p)
    w = coeffs.values
    out = []
    for q in range(1, n_max + 1):
        if mu[q] == 0 or not w[q]:
            continue
        cqh = ramanujan_sum(table, q, h)
        if cqh == 0:
            continue
        inner = mu[q] * psi_full
        for p, _ in table.factorize(q):
            lm = lmass.get(p, 0.0)
            if lm:
                inner += (ramanujan_sum(table, q, p) - mu[q]) * lm
        out.append(float(w[q]) * cqh / phi[q] * inner)
    return math.fsum(out)


def remainder_r(table: ArithTable, n_max: int, h: int, mode: str = "float",
                composite_only: bool = False):
    """R(n_max, h): the part of the expanded correlation on pairs (n, q)
    with gcd(n, q) > 1:

        sum over prime powers n <= n_max, squarefree q <= n_max with
        spf-overlap, of Lambda(n) w(q)
        (c_q(n + h) - c_q(n) c_q(h) / phi(q)).

    Terms with q prime vanish identically; ``composite_only`` drops them
    so tests can confirm that.
    """
    _check_mode(mode)
    table.check(n_max, "n_max")
    coeffs = _wintner_cached(table, n_max, mode)
    mu, phi = table.mu, table.phi
    exact = mode == "exact"
    parts = []
    for pk, p in table.prime_powers:
        if pk > n_max:
            break
        for q in range(p, n_max + 1, p):
            if mu[q] == 0 or (composite_only and q == p):
                continue
            w = coeffs[q]
            if not w:
                continue
            bracket = (ramanujan_sum(table, q, pk + h)
                       - Fraction(ramanujan_sum(table, q, pk)
                                  * ramanujan_sum(table, q, h), phi[q]))
            if not bracket:
                continue
            if exact:
                parts.append((w * LogForm.log_prime(p)).scale(bracket))
            else:
                parts.append(w * math.log(p) * float(bracket))
    return form_sum(parts) if exact else math.fsum(parts)


def delta_via_corr(table: ArithTable, n_max: int, h: int,
                   mode: str = "float"):
    """Delta as the mixed correlation minus its main term minus R."""
    c = corr_lambda_lambdaN(table, n_max, h, mode)
    e = expansion_rhs(table, n_max, h, mode)
    r = remainder_r(table, n_max, h, mode)
    return c - e - r


# -- progression-sum building blocks for routes 3 and 4 --------------


def d_n_sum(table: ArithTable, n_max: int, h: int, q: int,
            r: int) -> Fraction:
    """D_N(h; q, r) = sum over k in (Z/qZ)* of S_N(q, k; r) dev(h; q, k),
    also equal to sum over n <= N coprime to q of c_r(n) dev(h; q, n).

    Both representations are computed and asserted equal before the
    value is returned.
    """
    if gcd(q, r) != 1:
        raise DomainError(f"q = {q} and r = {r} must be coprime")
    by_k = sum((s_sum(table, n_max, q, k, r) * deviation(table, h, q, k)
                for k in range(1, q + 1) if gcd(k, q) == 1), _F0)
    by_n = sum((ramanujan_sum(table, r, n) * deviation(table, h, q, n)
                for n in range(1, n_max + 1) if gcd(n, q) == 1), _F0)
    if by_k != by_n:
        raise AssertionError(
            f"D_N representations disagree at N={n_max} h={h} q={q} r={r}")
    return by_k


def t_sum(table: ArithTable, n_max: int, h: int, m: int, q: int,
          r: int) -> int:
    """T_{N,h}(m; q, r) = sum of c_r(n) over n <= N with gcd(n, q) = 1
    and n + h = 0 (mod m)."""
    table.check(r, "modulus r")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return sum(ramanujan_sum(table, r, n)
               for n in range(1, n_max + 1)
               if gcd(n, q) == 1 and (n + h) % m == 0)


def phi_sum(table: ArithTable, n_max: int, h: int, q: int, r: int,
            route: str = "both") -> int:
    """Phi_{N,h}(q, r) = sum over non-principal chi mod q of
    Upsilon_r(N, conj chi) chi*(-h) d_chi, a rational integer.

    route="divisors" evaluates it through progression sums:
    with t = gcd(q, h),

        Phi = mu(q) mu(t) phi(q)/phi(t)
              * sum over m | q, gcd(m, h) = 1 of m mu(m) T_{N,h}(m; q, r)
              - T_{N,h}(1; q, r),

    the subtracted T(1) being the principal-character term of the
    underlying primitive-character decomposition.  route="characters"
    sums the character side in Z[zeta] and asserts the result rational.
    The default computes both and insists they agree.
    """
    table.check(q, "modulus q")
    if table.mu[q] == 0:
        raise DomainError(f"modulus {q} is not squarefree")
    if route == "both":
        a = phi_sum(table, n_max, h, q, r, "divisors")
        b = phi_sum(table, n_max, h, q, r, "characters")
        if a != b:
            raise AssertionError(
                f"phi_sum routes disagree at N={n_max} h={h} q={q} r={r}:"
                f" {a} vs {b}")
        return a
    if route == "divisors":
        t = gcd(q, h)
        lead = table.mu[q] * table.mu[t] * (table.phi[q] // table.phi[t])
        s = sum(m * table.mu[m] * t_sum(table, n_max, h, m, q, r)
                for m in table.divisors(q) if gcd(m, h) == 1)
        return lead * s - t_sum(table, n_max, h, 1, q, r)
    if route != "characters":
        raise ValueError(f"unknown route {route!r}")
    from .characters import character_group, upsilon
    total = CyclotomicElement.zero(1)
    for chi in character_group(table, q):
        if chi.is_principal():
            continue
        star = chi.primitive_part()
        j = star.value_exponent(-h)
        if j is None:
            continue
        ups = upsilon(table, chi, r, n_max)
        total = total + ups.times_root(j).scaled(chi.conductor)
    v = total.as_int()
    if v is None:
        raise ArithmeticError(f"character sum not rational: {total}")
    return v


# -- routes 3 and 4 --------------------------------------------------


def _outer_moduli(table: ArithTable, n_max: int):
    return [q for q in range(3, n_max + 1) if table.mu[q]]


def _dev_vector(table: ArithTable, n_max: int, h: int, q: int) -> np.ndarray:
    """Integer vector pd with pd[n] = phi(q) dev(h; q, n) for n coprime
    to q, 0 elsewhere (including n = 0)."""
    ns = np.arange(n_max + 1, dtype=np.int64)
    g = np.gcd((ns + h) % q, q)
    d = q // g
    cqnh = table.phi_np[q] // table.phi_np[d] * table.mu_np[d]
    pd = table.phi[q] * cqnh - table.mu[q] * ramanujan_sum(table, q, h)
    pd = np.where(np.gcd(ns, q) == 1, pd, 0)
    pd[0] = 0
    return pd


def delta_form1(table: ArithTable, n_max: int, h: int, mode: str = "float"):
    """Delta by the first reformulation: outer squarefree q >= 3,
    inner coprime moduli r with the restricted coefficients w^(q)(r),
    against D_N(h; q, r).  Moduli q in {1, 2} contribute nothing."""
    _check_mode(mode)
    table.check(n_max, "n_max")
    coeffs = _wintner_cached(table, n_max, mode)
    c_mat = _c_matrix(table, n_max)
    out = []
    for q in _outer_moduli(table, n_max):
        w = coeffs[q]
        if not w:
            continue
        pd = _dev_vector(table, n_max, h, q)
        if not pd.any():
            continue
        dhat = c_mat @ pd  # dhat[r] = phi(q) D_N(h; q, r)
        inner_coeffs = _coprime_cached(table, n_max, q, mode)
        phi_q = table.phi[q]
        if mode == "exact":
            inner = form_sum(
                wr.scale(Fraction(int(dhat[r]), phi_q))
                for r, wr in inner_coeffs.items() if dhat[r] and wr)
            if inner:
                out.append(w * inner)
        else:
            inner = math.fsum(wr * float(dhat[r])
                              for r, wr in inner_coeffs.items())
            out.append(w * inner / phi_q)
    return form_sum(out) if mode == "exact" else math.fsum(out)


def delta_form2(table: ArithTable, n_max: int, h: int, mode: str = "float"):
    """Delta by the second reformulation: the q-sum of form1 grouped by
    t = gcd(q, h), with D_N factored as mu(t) phi(t) / phi(q) times the
    integer sums Phi_{N,h}(q, r) of phi_sum."""
    _check_mode(mode)
    if h < 1:
        raise ValueError(f"shift h must be >= 1, got {h}")
    table.check(n_max, "n_max")
    coeffs = _wintner_cached(table, n_max, mode)
    c_mat = _c_matrix(table, n_max)
    ns = np.arange(n_max + 1, dtype=np.int64)
    out = []
    for q in _outer_moduli(table, n_max):
        w = coeffs[q]
        if not w:
            continue
        t = gcd(q, h)
        lead = table.mu[q] * table.mu[t] * (table.phi[q] // table.phi[t])
        wv = np.zeros(n_max + 1, dtype=np.int64)
        for m in table.divisors(q):
            if gcd(m, h) == 1:
                wv[(ns + h) % m == 0] += m * table.mu[m]
        wv = lead * wv - 1
        wv = np.where(np.gcd(ns, q) == 1, wv, 0)
        wv[0] = 0
        phivec = c_mat @ wv  # Phi_{N,h}(q, r) for every r
        inner_coeffs = _coprime_cached(table, n_max, q, mode)
        scale = Fraction(table.mu[t] * table.phi[t], table.phi[q])
        if mode == "exact":
            inner = form_sum(
                wr.scale(Fraction(int(phivec[r])))
                for r, wr in inner_coeffs.items() if phivec[r] and wr)
            if inner:
                out.append((w * inner).scale(scale))
        else:
            inner = math.fsum(wr * float(phivec[r])
                              for r, wr in inner_coeffs.items())
            out.append(float(scale) * w * inner)
    return form_sum(out) if mode == "exact" else math.fsum(out)


def _c_matrix(table: ArithTable, n_max: int) -> np.ndarray:
    key = ("cmat", n_max)
    got = table.memo.get(key)
    if got is None:
        got = ramanujan_matrix(table, n_max, n_max)
        table.memo[key] = got
    return got


# -- singular series and reports -------------------------------------


def singular_series_truncated(table: ArithTable, h: int, q_max: int) -> float:
    """sum over q <= q_max of mu(q)^2 c_q(h) / phi(q)^2, the truncated
    singular series of the shift h."""
    table.check(q_max, "q_max")
    mu, phi = table.mu, table.phi
    return math.fsum(
        ramanujan_sum(table, q, h) / (phi[q] * phi[q])
        for q in range(1, q_max + 1) if mu[q])


def _primes_upto(bound: int) -> np.ndarray:
    mask = np.ones(bound + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(bound ** 0.5) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return np.nonzero(mask)[0]


def singular_series_euler(k: int, prime_bound: int) -> float:
    """Euler-product value of the singular series at even shift 2k:

        2 prod over odd p <= prime_bound of (1 - (p-1)^-2)
          prod over odd p | k of (p-1)/(p-2).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if prime_bound < 3:
        raise ValueError(f"prime bound must be >= 3, got {prime_bound}")
    val = 2.0
    for p in _primes_upto(prime_bound)[1:]:
        p = int(p)
        val *= 1.0 - 1.0 / ((p - 1) * (p - 1))
    m = k
    while m % 2 == 0:
        m //= 2
    p = 3
    while p * p <= m:
        if m % p == 0:
            val *= (p - 1) / (p - 2)
            while m % p == 0:
                m //= p
        p += 2
    if m > 1:
        val *= (m - 1) / (m - 2)
    return val


@dataclass
class DeltaReport:
    """One (N, h) cell: the four routes and the via-corr components."""

    N: int
    h: int
    mode: str
    delta_direct: float
    delta_via_corr: float
    delta_form1: float
    delta_form2: float
    corr: float
    expansion_rhs: float
    remainder_r: float
    max_pairwise_discrepancy: float
    elapsed: float


def delta_report(table: ArithTable, n_max: int, h: int,
                 mode: str = "float") -> DeltaReport:
    """Compute every route for one (N, h) and report float values (exact
    results are evaluated), plus the largest pairwise gap."""
    _check_mode(mode)
    t0 = time.perf_counter()
    c = corr_lambda_lambdaN(table, n_max, h, mode)
    e = expansion_rhs(table, n_max, h, mode)
    r = remainder_r(table, n_max, h, mode)
    routes = {
        "direct": delta_direct(table, n_max, h, mode),
        "via_corr": c - e - r,
        "form1": delta_form1(table, n_max, h, mode),
        "form2": delta_form2(table, n_max, h, mode),
    }
    if mode == "exact":
        routes = {k: v.evaluate() for k, v in routes.items()}
        c, e, r = c.evaluate(), e.evaluate(), r.evaluate()
    vals = list(routes.values())
    spread = max(abs(a - b) for a in vals for b in vals)
    return DeltaReport(N=n_max, h=h, mode=mode,
                       delta_direct=routes["direct"],
                       delta_via_corr=routes["via_corr"],
                       delta_form1=routes["form1"],
                       delta_form2=routes["form2"],
                       corr=c, expansion_rhs=e, remainder_r=r,
                       max_pairwise_discrepancy=spread,
                       elapsed=time.perf_counter() - t0)


@dataclass
class TrendPoint:
    N: int
    h: int
    delta: "float | LogForm"  # symbolic in exact mode
    delta_over_N: float


def delta_trend(table: ArithTable, grid, h: int,
                mode: str = "float") -> list[TrendPoint]:
    """delta_direct along an ascending grid of truncations."""
    out = []
    for n_max in grid:
        d = delta_direct(table, n_max, h, mode)
        v = d.evaluate() if mode == "exact" else d
        out.append(TrendPoint(N=n_max, h=h, delta=d,
                              delta_over_N=v / n_max))
    return out


@dataclass
class HLReport:
    """Observational comparison of the autocorrelation at shift 2k with
    the singular series."""

    N: int
    k: int
    h: int
    corr_over_N: float
    expansion_over_N: float
    tail_correction: float
    singular_truncated: float
    Q: int
    singular_euler: float
    prime_bound: int
    elapsed: float


def hl_experiment(table: ArithTable, n_max: int, k: int,
                  q_trunc: int = 10 ** 4,
                  prime_bound: int = 10 ** 6) -> HLReport:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    h = 2 * k
    t0 = time.perf_counter()
    table.check(n_max + h, "n_max + h")
    corr = corr_lambda_lambda(table, n_max, h, "float")
    rhs = expansion_rhs(table, n_max, h, "float")
    tail = corr_tail(table, n_max, h, "float")
    trunc = singular_series_truncated(table, h, min(q_trunc, table.limit))
    euler = singular_series_euler(k, prime_bound)
    return HLReport(N=n_max, k=k, h=h,
                    corr_over_N=corr / n_max,
                    expansion_over_N=rhs / n_max,
                    tail_correction=tail / n_max,
                    singular_truncated=trunc, Q=q_trunc,
                    singular_euler=euler, prime_bound=prime_bound,
                    elapsed=time.perf_counter() - t0)
