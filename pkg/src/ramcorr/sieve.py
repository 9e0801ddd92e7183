"""Multiplicative-function tables from a single linear sieve pass.

``build_sieve(limit)`` fills smallest-prime-factor, Moebius and Euler-phi
arrays for every ``n <= limit`` in O(limit) time, plus the ordered list
of primes.  Everything downstream (Ramanujan sums, expansion
coefficients, correlation sums) reads from one of these tables; indexing
past ``limit`` raises ``SieveRangeError`` rather than silently
recomputing.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import SieveRangeError
from .logforms import LogForm


class ArithTable:
    """Immutable-by-convention sieve tables up to ``limit`` inclusive.

    Attributes:
        limit: largest argument covered.
        spf: ``spf[n]`` is the smallest prime factor of ``n`` (0 for n < 2).
        mu: Moebius function values.
        phi: Euler totient values.
        primes: ascending list of primes ``<= limit``.
    """

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError(f"sieve limit must be >= 2, got {limit}")
        if limit > 10 ** 8:
            raise ValueError(f"sieve limit {limit} too large")
        self.limit = limit
        spf = [0] * (limit + 1)
        mu = [0] * (limit + 1)
        phi = [0] * (limit + 1)
        mu[1] = phi[1] = 1
        primes: list[int] = []
        for i in range(2, limit + 1):
            if spf[i] == 0:
                spf[i] = i
                mu[i] = -1
                phi[i] = i - 1
                primes.append(i)
            for p in primes:
                if p > spf[i] or i * p > limit:
                    break
                m = i * p
                spf[m] = p
                if i % p == 0:
                    mu[m] = 0
                    phi[m] = phi[i] * p
                    break
                mu[m] = -mu[i]
                phi[m] = phi[i] * (p - 1)
        self.spf = spf
        self.mu = mu
        self.phi = phi
        self.primes = primes
        # scratch space for cross-module memoisation (exact log-forms
        # are costly to rebuild; see expansion.py)
        self.memo: dict = {}

    def __repr__(self) -> str:
        return f"ArithTable(limit={self.limit})"

    # -- guards -------------------------------------------------------

    def check(self, n: int, what: str = "argument") -> int:
        if not 1 <= n <= self.limit:
            raise SieveRangeError(
                f"{what} {n} outside sieve range [1, {self.limit}]")
        return n

    # -- scalar queries ----------------------------------------------

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorisation ``[(p, e), ...]`` with ascending p."""
        self.check(n)
        out: list[tuple[int, int]] = []
        spf = self.spf
        while n > 1:
            p = spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def v_p(self, n: int, p: int) -> int:
        self.check(n)
        if p < 2:
            raise ValueError(f"p must be >= 2, got {p}")
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        return e

    def omega(self, n: int) -> int:
        """Number of distinct prime factors."""
        return len(self.factorize(n))

    def tau(self, n: int) -> int:
        """Number of divisors."""
        t = 1
        for _, e in self.factorize(n):
            t *= e + 1
        return t

    def is_squarefree(self, n: int) -> bool:
        self.check(n)
        return self.mu[n] != 0

    def divisors(self, n: int) -> list[int]:
        """All divisors, ascending."""
        ds = [1]
        for p, e in self.factorize(n):
            ds = [d * p ** k for d in ds for k in range(e + 1)]
        return sorted(ds)

    def squarefree_divisors(self, n: int) -> list[int]:
        """Divisors with nonzero Moebius value, ascending."""
        ds = [1]
        for p, _ in self.factorize(n):
            ds += [d * p for d in ds]
        return sorted(ds)

    def log_form(self, n: int) -> LogForm:
        """``log n`` as an exact form ``sum_e v_p(n) log p``; cached."""
        cached = self.memo.get(("log", n))
        if cached is None:
            if n == 1:
                cached = LogForm.zero()
            else:
                cached = sum((LogForm.log_prime(p, e)
                              for p, e in self.factorize(n)),
                             LogForm.zero())
            self.memo[("log", n)] = cached
        return cached

    def von_mangoldt(self, n: int) -> LogForm:
        """Exact von Mangoldt value: ``log p`` on prime powers, else 0."""
        self.check(n)
        if n == 1:
            return LogForm.zero()
        p = self.spf[n]
        while n % p == 0:
            n //= p
        return LogForm.log_prime(p) if n == 1 else LogForm.zero()

    # -- bulk views (float fast paths) --------------------------------

    @cached_property
    def mu_np(self) -> np.ndarray:
        return np.array(self.mu, dtype=np.int64)

    @cached_property
    def phi_np(self) -> np.ndarray:
        return np.array(self.phi, dtype=np.int64)

    @cached_property
    def vm_np(self) -> np.ndarray:
        """Float von Mangoldt values, ``vm_np[n] = log p`` on ``n = p^a``."""
        vm = np.zeros(self.limit + 1)
        for p in self.primes:
            lp = np.log(p)
            pk = p
            while pk <= self.limit:
                vm[pk] = lp
                pk *= p
        return vm

    @cached_property
    def prime_powers(self) -> list[tuple[int, int]]:
        """``(n, p)`` for every prime power ``n = p^a <= limit``, ascending n."""
        out = []
        for p in self.primes:
            pk = p
            while pk <= self.limit:
                out.append((pk, p))
                pk *= p
        out.sort()
        return out


def build_sieve(limit: int) -> ArithTable:
    """Construct the shared table; see :class:`ArithTable`."""
    return ArithTable(limit)


# functional aliases; same table-first calling convention as the rest
# of the library


def factorize(table: ArithTable, n: int) -> list[tuple[int, int]]:
    return table.factorize(n)


def omega_fn(table: ArithTable, n: int) -> int:
    return table.omega(n)


def tau_fn(table: ArithTable, n: int) -> int:
    return table.tau(n)


def v_p(table: ArithTable, p: int, n: int) -> int:
    """Exponent of the prime p in n; non-prime p is rejected."""
    table.check(p, "prime p")
    if p < 2 or table.spf[p] != p:
        raise ValueError(f"p = {p} is not prime")
    return table.v_p(n, p)


def is_squarefree(table: ArithTable, n: int) -> bool:
    return table.is_squarefree(n)


def von_mangoldt(table: ArithTable, n: int) -> LogForm:
    return table.von_mangoldt(n)
