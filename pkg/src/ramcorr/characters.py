"""Dirichlet characters of squarefree modulus, with exact values.

For squarefree q the unit group (Z/qZ)* is the direct product of the
cyclic groups (Z/pZ)* over p | q, so a character is determined by one
exponent a_p per prime: on the component it sends the fixed primitive
root g_p to zeta_(p-1)^(a_p).  Values are returned as exact roots of
unity in Z[zeta_ord] (see cyclotomic.py); a character is evaluated by
table lookup of discrete logarithms, so no floating point enters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .cyclotomic import CyclotomicElement
from .errors import DomainError
from .ramanujan import ramanujan_sum
from .sieve import ArithTable


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest primitive root mod prime p."""
    if p == 2:
        return 1
    order = p - 1
    # prime factors of p - 1 by trial division (p stays small here)
    fac = []
    m = order
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in fac):
            return g
    raise AssertionError(f"no primitive root found mod {p}")


@lru_cache(maxsize=None)
def index_table(p: int) -> tuple[int, ...]:
    """ind[n] = discrete log of n base the primitive root, for 1 <= n < p.

    Index 0 is a placeholder (-1).
    """
    g = primitive_root(p)
    ind = [-1] * p
    x = 1
    for j in range(p - 1):
        ind[x] = j
        x = x * g % p
    return tuple(ind)


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod squarefree ``modulus``; ``exponents`` pairs each
    prime p | modulus with the exponent a_p in [0, p-2]."""

    modulus: int
    exponents: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        o = 1
        for p, a in self.exponents:
            if a:
                o = lcm(o, (p - 1) // gcd(a, p - 1))
        return o

    @property
    def conductor(self) -> int:
        d = 1
        for p, a in self.exponents:
            if a:
                d *= p
        return d

    def is_principal(self) -> bool:
        return all(a == 0 for _, a in self.exponents)

    def primitive_part(self) -> "DirichletCharacter":
        """The primitive character mod the conductor inducing this one."""
        kept = tuple((p, a) for p, a in self.exponents if a)
        return DirichletCharacter(self.conductor, kept)

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.modulus,
            tuple((p, (-a) % (p - 1)) for p, a in self.exponents))

    def value_exponent(self, n: int) -> int | None:
        """j with chi(n) = zeta_order^j, or None when gcd(n, modulus) > 1."""
        m = self.order
        j = 0
        for p, a in self.exponents:
            np_ = n % p
            if np_ == 0:
                return None
            if a:
                comp_ord = (p - 1) // gcd(a, p - 1)
                a_red = a // gcd(a, p - 1)
                j += a_red * index_table(p)[np_] * (m // comp_ord)
        return j % m

    def __call__(self, n: int) -> CyclotomicElement:
        j = self.value_exponent(n)
        m = self.order
        if j is None:
            return CyclotomicElement.zero(m)
        return CyclotomicElement.root(m, j)


def character_group(table: ArithTable, q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod squarefree q, principal character first."""
    table.check(q, "modulus q")
    if table.mu[q] == 0:
        raise DomainError(f"modulus {q} is not squarefree")
    ps = [p for p, _ in table.factorize(q)]
    out = []
    for exps in itertools.product(*[range(p - 1) for p in ps]):
        out.append(DirichletCharacter(q, tuple(zip(ps, exps))))
    return out


def toth_sum(table: ArithTable, chi: DirichletCharacter, n: int
             ) -> CyclotomicElement:
    """sum over k in (Z/qZ)* of chi(k) c_q(k + n), exactly.

    Accumulates integer weights per exponent of zeta_ord and reduces
    once, so the cost is phi(q) integer operations plus one reduction.
    """
    q = chi.modulus
    table.check(q, "modulus q")
    if table.mu[q] == 0:
        raise DomainError(f"modulus {q} is not squarefree")
    m = chi.order
    weights: dict[int, int] = {}
    for k in range(1, q + 1):
        j = chi.value_exponent(k)
        if j is None:
            continue
        c = ramanujan_sum(table, q, k + n)
        if c:
            weights[j] = weights.get(j, 0) + c
    return CyclotomicElement.from_weights(m, weights)


def toth_rhs(table: ArithTable, chi: DirichletCharacter, n: int
             ) -> CyclotomicElement:
    """d mu(q/d) c_{q/d}(n) chi*(-n) with d the conductor of chi.

    The identity toth_sum == toth_rhs holds for every character of
    squarefree modulus; the verification suites assert it.
    """
    q = chi.modulus
    d = chi.conductor
    star = chi.primitive_part()
    j = star.value_exponent(-n)
    m = chi.order
    if j is None:
        return CyclotomicElement.zero(m)
    w = d * table.mu[q // d] * ramanujan_sum(table, q // d, n)
    return CyclotomicElement.root(m, j, w)


def upsilon(table: ArithTable, chi: DirichletCharacter, r: int,
            n_max: int) -> CyclotomicElement:
    """sum over n <= n_max of conj(chi)(n) c_r(n), exactly."""
    table.check(r, "modulus r")
    m = chi.order
    weights: dict[int, int] = {}
    for n in range(1, n_max + 1):
        j = chi.value_exponent(n)
        if j is None:
            continue
        c = ramanujan_sum(table, r, n)
        if c:
            jj = (-j) % m
            weights[jj] = weights.get(jj, 0) + c
    return CyclotomicElement.from_weights(m, weights)


def primitive_sum(table: ArithTable, d: int, a: int) -> int:
    """sum over primitive characters mod d of chi(a), for gcd(a, d) = 1:
    the divisor formula  sum over m | gcd(d, a-1) of phi(m) mu(d/m)."""
    table.check(d, "modulus d")
    if gcd(a, d) != 1:
        raise DomainError(f"a = {a} not coprime to d = {d}")
    g = gcd(d, a - 1)  # gcd(d, 0) = d covers a = 1
    return sum(table.phi[m] * table.mu[d // m] for m in table.divisors(g))


def primitive_sum_direct(table: ArithTable, d: int, a: int) -> int:
    """Same sum by enumerating the primitive characters and adding their
    values in Z[zeta]; the result is asserted to be a rational integer."""
    table.check(d, "modulus d")
    if table.mu[d] == 0:
        raise DomainError(f"modulus {d} is not squarefree")
    if gcd(a, d) != 1:
        raise DomainError(f"a = {a} not coprime to d = {d}")
    big = 1
    for p, _ in table.factorize(d):
        big = lcm(big, p - 1)
    weights: dict[int, int] = {}
    for chi in character_group(table, d):
        if chi.conductor != d:
            continue
        j = chi.value_exponent(a)
        m = chi.order
        jj = j * (big // m) % big
        weights[jj] = weights.get(jj, 0) + 1
    total = CyclotomicElement.from_weights(big, weights)
    v = total.as_int()
    if v is None:
        raise ArithmeticError(
            f"primitive character sum mod {d} at {a} is not rational: {total}")
    return v


def char_eval(chi: DirichletCharacter, n: int) -> CyclotomicElement:
    return chi(n)


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def primitive_part(chi: DirichletCharacter) -> DirichletCharacter:
    return chi.primitive_part()
