"""Ramanujan sums and sums of them over arithmetic progressions.

The workhorse is the closed form

    c_q(n) = phi(q) mu(q/g) / phi(q/g),   g = gcd(n, q),

an integer for all q >= 1 and all integers n (n is read mod q).  The
independent check ``ramanujan_sum_bruteforce`` sums the defining
exponentials e(jn/q) over j in (Z/qZ)* instead and never touches the
closed form.

Progression sums S_N(q, k; r) = sum of c_r(n) over n <= N, n = k mod q
have closed evaluations in the two structured cases r | q and
gcd(q, r) = 1; both are implemented next to the direct summation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import DomainError, NumericError
from .sieve import ArithTable

_IMAG_TOL = 1e-6


def ramanujan_sum(table: ArithTable, q: int, n: int) -> int:
    """c_q(n) via the closed form; n may be any integer (negative included)."""
    table.check(q, "modulus q")
    g = gcd(n % q, q)
    d = q // g
    return table.phi[q] // table.phi[d] * table.mu[d]


def ramanujan_sum_bruteforce(table: ArithTable, q: int, n: int) -> int:
    """c_q(n) as the literal exponential sum over j in (Z/qZ)*.

    O(q) work.  Raises ``NumericError`` if the imaginary part fails to
    cancel to within 1e-6 or the real part is not that close to an
    integer.
    """
    table.check(q, "modulus q")
    two_pi_over_q = 2.0 * math.pi / q
    re = []
    im = []
    for j in range(1, q + 1):
        if gcd(j, q) == 1:
            ang = two_pi_over_q * ((j * n) % q)
            re.append(math.cos(ang))
            im.append(math.sin(ang))
    re_s = math.fsum(re)
    im_s = math.fsum(im)
    if abs(im_s) > _IMAG_TOL:
        raise NumericError(f"imaginary residual {im_s:.3e} for c_{q}({n})")
    r = round(re_s)
    if abs(re_s - r) > _IMAG_TOL:
        raise NumericError(f"real part {re_s!r} of c_{q}({n}) not near an integer")
    return r


def bruteforce_row(table: ArithTable, q: int, n_max: int) -> np.ndarray:
    """``[c_q(0), ..., c_q(n_max)]`` by vectorised exponential sums.

    Same route as :func:`ramanujan_sum_bruteforce` (roots of unity over
    the coprime residues), batched with a shared cosine table so large
    grids stay cheap.
    """
    table.check(q, "modulus q")
    ang = 2.0 * np.pi * np.arange(q) / q
    cos_t, sin_t = np.cos(ang), np.sin(ang)
    j = np.array([x for x in range(1, q + 1) if gcd(x, q) == 1])
    idx = np.multiply.outer(j % q, np.arange(n_max + 1)) % q
    re = cos_t[idx].sum(axis=0)
    im = sin_t[idx].sum(axis=0)
    worst = float(np.abs(im).max())
    if worst > _IMAG_TOL:
        raise NumericError(f"imaginary residual {worst:.3e} in row q={q}")
    out = np.rint(re)
    if float(np.abs(re - out).max()) > _IMAG_TOL:
        raise NumericError(f"non-integral real parts in row q={q}")
    return out.astype(np.int64)


def ramanujan_matrix(table: ArithTable, q_max: int, n_max: int) -> np.ndarray:
    """Closed-form c_q(n) for 1 <= q <= q_max, 0 <= n <= n_max.

    Row 0 is zero padding so the array indexes as ``C[q, n]``.
    """
    table.check(q_max, "modulus q_max")
    qs = np.arange(1, q_max + 1, dtype=np.int64)
    ns = np.arange(0, n_max + 1, dtype=np.int64)
    g = np.gcd.outer(qs, ns)
    d = qs[:, None] // g
    c = table.phi_np[qs][:, None] // table.phi_np[d] * table.mu_np[d]
    out = np.zeros((q_max + 1, n_max + 1), dtype=np.int64)
    out[1:] = c
    return out


def cohen_mean(table: ArithTable, q: int, h: int) -> Fraction:
    """Average of c_q(k + h) over k in (Z/qZ)*, as an exact rational."""
    table.check(q, "modulus q")
    total = sum(ramanujan_sum(table, q, k + h)
                for k in range(1, q + 1) if gcd(k, q) == 1)
    return Fraction(total, table.phi[q])


def brauer_rademacher(table: ArithTable, q: int, d: int, n: int) -> Fraction:
    """sum over t | q/d with gcd(t, n) = 1 of  t mu(q/(td)) / phi(td).

    Requires squarefree q and d | q.  Equals mu(q/d) c_{q/d}(n) / phi(q)
    (the Brauer-Rademacher identity); tests assert that equality.
    """
    table.check(q, "modulus q")
    if table.mu[q] == 0:
        raise DomainError(f"q = {q} is not squarefree")
    if d < 1 or q % d != 0:
        raise DomainError(f"d = {d} does not divide q = {q}")
    s = Fraction(0)
    for t in table.divisors(q // d):
        if gcd(t, n) == 1:
            s += Fraction(t * table.mu[q // (t * d)], table.phi[t * d])
    return s


# -- progression sums ------------------------------------------------


def residue_count(n_max: int, q: int, k: int) -> int:
    """#{1 <= n <= n_max : n = k (mod q)}."""
    if n_max <= 0:
        return 0
    k0 = k % q
    if k0 == 0:
        return n_max // q
    if k0 > n_max:
        return 0
    return (n_max - k0) // q + 1


def s_sum(table: ArithTable, n_max: int, q: int, k: int, r: int) -> int:
    """Direct S_N(q, k; r) = sum of c_r(n), n <= n_max, n = k mod q."""
    table.check(r, "modulus r")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    k0 = k % q
    start = k0 if k0 else q
    return sum(ramanujan_sum(table, r, n) for n in range(start, n_max + 1, q))


def crt_solution(k: int, t: int, q: int, r: int) -> int:
    """The unique n in [1, qr] with n = k (mod q), n = t (mod r).

    Needs gcd(q, r) = 1; the residue 0 mod qr is reported as qr itself.
    """
    if q < 1 or r < 1:
        raise ValueError("moduli must be positive")
    if gcd(q, r) != 1:
        raise DomainError(f"moduli q={q}, r={r} are not coprime")
    m = q * r
    x = (k * r * pow(r, -1, q) + t * q * pow(q, -1, r)) % m
    return x if x else m


def s_sum_closed(table: ArithTable, n_max: int, q: int, k: int, r: int) -> int:
    """Closed-form S_N(q, k; r) for the cases r | q and gcd(q, r) = 1.

    r | q:  c_r(n) is constant on the progression, so the sum is
            c_r(k) times the progression count.
    coprime: sum over t mod r of c_r(t) (floor(N/qr) + nu(t, k)), where
            nu says whether the CRT solution for (k mod q, t mod r)
            lands in the partial block (1, ..., N mod qr].
    Any other (q, r) raises ``DomainError``.
    """
    table.check(r, "modulus r")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if q % r == 0:
        return ramanujan_sum(table, r, k) * residue_count(n_max, q, k)
    if gcd(q, r) == 1:
        m = q * r
        whole, part = divmod(n_max, m)
        # n(k, t+1) - n(k, t) is 0 mod q and 1 mod r, so successive CRT
        # solutions differ by a fixed step; one inverse serves all t
        step = q * pow(q, -1, r) % m if r > 1 else 0
        n = crt_solution(k, 1, q, r)
        total = 0
        for t in range(1, r + 1):
            nu = 1 if n <= part else 0
            total += ramanujan_sum(table, r, t) * (whole + nu)
            n += step
            if n > m:
                n -= m
        return total
    raise DomainError(f"need r | q or gcd(q, r) = 1, got q={q}, r={r}")


def truncated_orthogonality(table: ArithTable, r: int, q: int, n: int,
                            x: int) -> Fraction:
    """(1/x) sum_{h <= x} c_r(h + n) c_q(h), exactly.

    The summand is periodic mod lcm(q, r), so the average is computed
    from one full period plus the partial block; x = 10^6 costs the same
    as x = one period.  As x grows this tends to c_q(n) when r = q and
    to 0 otherwise.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    period = q * r // gcd(q, r)
    vals = [ramanujan_sum(table, r, h + n) * ramanujan_sum(table, q, h)
            for h in range(1, period + 1)]
    whole, part = divmod(x, period)
    total = whole * sum(vals) + sum(vals[:part])
    return Fraction(total, x)


class RamanujanContext:
    """Bound view of the sum routines over one table, for callers that
    pass moduli and arguments only."""

    def __init__(self, table: ArithTable):
        self.table = table

    def __repr__(self) -> str:
        return f"RamanujanContext({self.table!r})"

    def ramanujan_sum(self, q: int, n: int) -> int:
        return ramanujan_sum(self.table, q, n)

    def ramanujan_sum_bruteforce(self, q: int, n: int) -> int:
        return ramanujan_sum_bruteforce(self.table, q, n)

    def cohen_mean(self, q: int, h: int) -> Fraction:
        return cohen_mean(self.table, q, h)

    def brauer_rademacher(self, q: int, d: int, n: int) -> Fraction:
        return brauer_rademacher(self.table, q, d, n)

    def s_sum(self, n_max: int, q: int, k: int, r: int) -> int:
        return s_sum(self.table, n_max, q, k, r)

    def s_sum_closed(self, n_max: int, q: int, k: int, r: int) -> int:
        return s_sum_closed(self.table, n_max, q, k, r)
