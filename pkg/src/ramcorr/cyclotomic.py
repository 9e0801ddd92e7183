"""Exact elements of Z[zeta_m], reduced modulo the m-th cyclotomic polynomial.

An element is a coefficient vector over the basis 1, zeta, ...,
zeta^(deg Phi_m - 1), with integer entries.  Character values and the
exponential sums built from them stay in this representation, so
identities between them are decided exactly; ``to_complex`` exists only
for embedding sanity checks.

Elements of different orders combine by lifting both to Z[zeta_lcm]
through zeta_m = zeta_M^(M/m).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

import numpy as np


def _small_divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, constant term first, monic."""
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    # x^m - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (m - 1) + [1]
    for d in _small_divisors(m):
        if d == m:
            continue
        den = cyclotomic_poly(d)
        # exact long division, high terms first
        out = [0] * (len(num) - len(den) + 1)
        rem = list(num)
        for i in range(len(out) - 1, -1, -1):
            c = rem[i + len(den) - 1]
            out[i] = c
            if c:
                for j, dj in enumerate(den):
                    rem[i + j] -= c * dj
        if any(rem[:len(den) - 1]):
            raise AssertionError(f"inexact division building Phi_{m}")
        num = out
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction(m: int) -> np.ndarray:
    """(m, deg) int64 matrix; row j is x^j reduced mod Phi_m."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = np.zeros((m, deg), dtype=np.int64)
    cur = [0] * deg
    for j in range(m):
        if j < deg:
            cur = [0] * deg
            cur[j] = 1
        else:
            top = cur[deg - 1]
            cur = [0] + cur[:deg - 1]
            if top:
                for i in range(deg):
                    cur[i] -= top * phi[i]
        rows[j] = cur
    return rows


@dataclass(frozen=True)
class CyclotomicElement:
    order: int
    coeffs: tuple[int, ...]

    @staticmethod
    def zero(m: int = 1) -> "CyclotomicElement":
        deg = len(cyclotomic_poly(m)) - 1
        return CyclotomicElement(m, (0,) * deg)

    @staticmethod
    def integer(c: int, m: int = 1) -> "CyclotomicElement":
        deg = len(cyclotomic_poly(m)) - 1
        return CyclotomicElement(m, (c,) + (0,) * (deg - 1))

    @staticmethod
    def root(m: int, j: int, weight: int = 1) -> "CyclotomicElement":
        """``weight * zeta_m^j``."""
        return CyclotomicElement.from_weights(m, {j % m: weight})

    @staticmethod
    def from_weights(m: int, weights: dict[int, int]) -> "CyclotomicElement":
        """sum of w * zeta_m^j over the exponent->weight map."""
        acc = np.zeros(m, dtype=np.int64)
        for j, w in weights.items():
            acc[j % m] += w
        return CyclotomicElement(m, tuple(int(x) for x in acc @ _reduction(m)))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_int(self) -> int | None:
        """The value as a rational integer, or None if it is not one."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def lift(self, m: int) -> "CyclotomicElement":
        """Rewrite in Z[zeta_m]; requires order | m."""
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError(f"cannot lift order {self.order} into {m}")
        step = m // self.order
        return CyclotomicElement.from_weights(
            m, {i * step: c for i, c in enumerate(self.coeffs) if c})

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if self.order != other.order:
            m = lcm(self.order, other.order)
            return self.lift(m) + other.lift(m)
        return CyclotomicElement(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self + (-other)

    def scaled(self, c: int) -> "CyclotomicElement":
        return CyclotomicElement(self.order, tuple(c * a for a in self.coeffs))

    def times_root(self, j: int) -> "CyclotomicElement":
        """Multiply by zeta_order^j."""
        return CyclotomicElement.from_weights(
            self.order,
            {(i + j) % self.order: c for i, c in enumerate(self.coeffs) if c})

    def conjugate(self) -> "CyclotomicElement":
        return CyclotomicElement.from_weights(
            self.order,
            {(-i) % self.order: c for i, c in enumerate(self.coeffs) if c})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        m = lcm(self.order, other.order)
        return self.lift(m).coeffs == other.lift(m).coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    # -- embedding ----------------------------------------------------

    def to_complex(self) -> complex:
        m = self.order
        return sum(c * np.exp(2j * np.pi * i / m)
                   for i, c in enumerate(self.coeffs) if c) + 0j

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")
