"""Exact arithmetic with rational combinations of prime logarithms.

A ``LogForm`` is an element of the Q-vector space spanned by ``1``, the
symbols ``log p`` for primes ``p``, and the products ``log p * log p'``
with ``p <= p'``.  Sums of von Mangoldt values, truncations of them, and
their pairwise products all live in this space, so identities between
such sums can be checked exactly instead of to floating-point tolerance.

Coefficients are ``fractions.Fraction``; the zero coefficient is never
stored, so two forms are equal iff they compare equal componentwise.
Products that would need degree three raise ``DegreeError``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DegreeError

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)

_LOGS: dict[int, float] = {}


def _logf(p: int) -> float:
    v = _LOGS.get(p)
    if v is None:
        v = math.log(p)
        _LOGS[p] = v
    return v


def _coerce(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficients must be int or Fraction, not {type(x).__name__}")


@dataclass(frozen=True)
class LogForm:
    """Canonical element ``const + sum c_p log p + sum c_pp' log p log p'``.

    ``lin`` holds ``(p, coeff)`` pairs sorted by ``p``; ``bil`` holds
    ``(p, p', coeff)`` triples with ``p <= p'``, sorted.  Build instances
    through the factory methods; the raw constructor does not normalise.
    """

    const: Fraction = _ZERO
    lin: tuple[tuple[int, Fraction], ...] = ()
    bil: tuple[tuple[int, int, Fraction], ...] = ()

    # -- construction -------------------------------------------------

    @staticmethod
    def zero() -> "LogForm":
        return _ZERO_FORM

    @staticmethod
    def number(c: Scalar) -> "LogForm":
        """The rational constant ``c``."""
        c = _coerce(c)
        if not c:
            return _ZERO_FORM
        return LogForm(const=c)

    @staticmethod
    def log_prime(p: int, coeff: Scalar = 1) -> "LogForm":
        """``coeff * log p`` for a prime ``p`` (primality is not checked
        here; the sieve layer owns that)."""
        if p < 2:
            raise ValueError(f"log argument must be >= 2, got {p}")
        c = _coerce(coeff)
        if not c:
            return _ZERO_FORM
        return LogForm(lin=((p, c),))

    @staticmethod
    def _build(const: Fraction,
               lin: dict[int, Fraction],
               bil: dict[tuple[int, int], Fraction]) -> "LogForm":
        lt = tuple(sorted((p, c) for p, c in lin.items() if c))
        bt = tuple(sorted((a, b, c) for (a, b), c in bil.items() if c))
        if not const and not lt and not bt:
            return _ZERO_FORM
        return LogForm(const=const, lin=lt, bil=bt)

    # -- queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        if self.bil:
            return 2
        if self.lin:
            return 1
        return 0

    def is_zero(self) -> bool:
        return not (self.const or self.lin or self.bil)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def evaluate(self) -> float:
        """Float value; term order is fixed by the canonical sorting and
        the accumulation is exactly rounded (``math.fsum``)."""
        terms = [float(self.const)]
        terms.extend(float(c) * _logf(p) for p, c in self.lin)
        terms.extend(float(c) * _logf(a) * _logf(b) for a, b, c in self.bil)
        return math.fsum(terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: object) -> "LogForm":
        if isinstance(other, (int, Fraction)):
            other = LogForm.number(other)
        if not isinstance(other, LogForm):
            return NotImplemented
        lin = dict(self.lin)
        for p, c in other.lin:
            lin[p] = lin.get(p, _ZERO) + c
        bil = {(a, b): c for a, b, c in self.bil}
        for a, b, c in other.bil:
            bil[(a, b)] = bil.get((a, b), _ZERO) + c
        return LogForm._build(self.const + other.const, lin, bil)

    def __radd__(self, other: object) -> "LogForm":
        if other == 0:
            return self
        return self.__add__(other)

    def __neg__(self) -> "LogForm":
        return LogForm(const=-self.const,
                       lin=tuple((p, -c) for p, c in self.lin),
                       bil=tuple((a, b, -c) for a, b, c in self.bil))

    def __sub__(self, other: object) -> "LogForm":
        if isinstance(other, (int, Fraction)):
            other = LogForm.number(other)
        if not isinstance(other, LogForm):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: object) -> "LogForm":
        return (-self).__add__(other)

    def scale(self, c: Scalar) -> "LogForm":
        c = _coerce(c)
        if not c:
            return _ZERO_FORM
        return LogForm(const=self.const * c,
                       lin=tuple((p, k * c) for p, k in self.lin),
                       bil=tuple((a, b, k * c) for a, b, k in self.bil))

    def __mul__(self, other: object) -> "LogForm":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LogForm):
            return NotImplemented
        if self.bil and (other.lin or other.bil):
            raise DegreeError("product exceeds degree 2")
        if other.bil and self.lin:
            raise DegreeError("product exceeds degree 2")
        lin: dict[int, Fraction] = {}
        bil: dict[tuple[int, int], Fraction] = {}
        const = self.const * other.const
        if other.const:
            for p, c in self.lin:
                lin[p] = lin.get(p, _ZERO) + c * other.const
            for a, b, c in self.bil:
                bil[(a, b)] = bil.get((a, b), _ZERO) + c * other.const
        if self.const:
            for p, c in other.lin:
                lin[p] = lin.get(p, _ZERO) + c * self.const
            for a, b, c in other.bil:
                bil[(a, b)] = bil.get((a, b), _ZERO) + c * self.const
        for p, cp in self.lin:
            for r, cr in other.lin:
                key = (p, r) if p <= r else (r, p)
                bil[key] = bil.get(key, _ZERO) + cp * cr
        return LogForm._build(const, lin, bil)

    def __rmul__(self, other: object) -> "LogForm":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- display ------------------------------------------------------

    def _term_strings(self) -> Iterator[tuple[Fraction, str]]:
        if self.const:
            yield self.const, ""
        for p, c in self.lin:
            yield c, f"log({p})"
        for a, b, c in self.bil:
            yield c, f"log({a})*log({b})"

    def __str__(self) -> str:
        parts: list[str] = []
        for coeff, sym in self._term_strings():
            mag = -coeff if coeff < 0 else coeff
            if not sym:
                body = str(mag)
            elif mag == 1:
                body = sym
            else:
                body = f"{mag}*{sym}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"LogForm[{self}]"


_ZERO_FORM = LogForm()


def form_sum(forms) -> LogForm:
    """Sum an iterable of forms (faster than repeated ``+`` on long
    iterables because the accumulator dicts are built once)."""
    const = _ZERO
    lin: dict[int, Fraction] = {}
    bil: dict[tuple[int, int], Fraction] = {}
    for f in forms:
        const += f.const
        for p, c in f.lin:
            lin[p] = lin.get(p, _ZERO) + c
        for a, b, c in f.bil:
            bil[(a, b)] = bil.get((a, b), _ZERO) + c
    return LogForm._build(const, lin, bil)


# functional aliases over the operator interface


def lf_log(table, n: int) -> LogForm:
    """log n decomposed over prime logarithms (table supplies the
    factorisation)."""
    return table.log_form(n)


def lf_add(a: LogForm, b: LogForm) -> LogForm:
    return a + b


def lf_scale(a: LogForm, c: Scalar) -> LogForm:
    return a.scale(c)


def lf_mul(a: LogForm, b: LogForm) -> LogForm:
    return a * b


def lf_eval(a: LogForm) -> float:
    return a.evaluate()


def lf_is_zero(a: LogForm) -> bool:
    return a.is_zero()
