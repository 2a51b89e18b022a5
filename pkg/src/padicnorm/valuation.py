"""Exact arithmetic in the additive value group of the p-adic rationals.

Everything downstream works additively: the size of a vector is the
base-p logarithm of its multiplicative norm.  Under that convention

* the valuation of the prime p is 1, so a uniformizer has size -1,
* nonzero rational scalars have sizes in Z, the full value group is Q,
* the norm of the zero vector is a bottom element below every rational,
  written "-inf" in serialized form,
* the multiplicative interval (|p|, 1] of filtration degrees becomes
  the additive interval (-1, 0].

All quantities are `fractions.Fraction`; floats never appear.  Each
multiplicative inequality is translated to the additive convention once
in this module and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import PreconditionError

Rational = Fraction | int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldConfig:
    """The base field Q together with the prime fixing its valuation."""

    prime: int

    def __post_init__(self) -> None:
        if not isinstance(self.prime, int) or not _is_prime(self.prime):
            raise PreconditionError(f"prime must be a prime number, got {self.prime!r}")


@total_ordering
class Value:
    """An element of the value group Q, or the bottom element.

    Bottom is the size of the zero vector: it is strictly smaller than
    every rational value and absorbing under addition.
    """

    __slots__ = ("mag",)

    def __init__(self, mag: Fraction | None):
        object.__setattr__(self, "mag", None if mag is None else Fraction(mag))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Value is immutable")

    @property
    def is_bottom(self) -> bool:
        return self.mag is None

    @staticmethod
    def _coerce(other) -> "Value":
        if isinstance(other, Value):
            return other
        if isinstance(other, (int, Fraction)):
            return Value(Fraction(other))
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.mag == o.mag

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.mag is None:
            return o.mag is not None
        if o.mag is None:
            return False
        return self.mag < o.mag

    def __add__(self, other) -> "Value":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.mag is None or o.mag is None:
            return BOTTOM
        return Value(self.mag + o.mag)

    __radd__ = __add__

    def __hash__(self) -> int:
        return hash(self.mag)

    def __str__(self) -> str:
        return "-inf" if self.mag is None else str(self.mag)

    def __repr__(self) -> str:
        return f"Value({self})"


BOTTOM = Value(None)


def pval(x: Rational, p: int) -> int:
    """p-adic valuation of a nonzero rational, as a plain int."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    if num == 0:
        raise PreconditionError("pval is undefined at 0")
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    if v:
        return v
    while den % p == 0:
        den //= p
        v -= 1
    return v


def val(x: Rational, cfg: FieldConfig) -> Value:
    """Valuation of a rational scalar; bottom at 0.

    val(8) is 3 and val(3/4) is -2 for the prime 2.
    """
    x = Fraction(x)
    if x == 0:
        return BOTTOM
    return Value(Fraction(pval(x, cfg.prime)))


def is_integral(x: Fraction, p: int) -> bool:
    """True iff x lies in the valuation ring, i.e. x == 0 or val(x) >= 0."""
    return x.denominator % p != 0


def frac_part(x: Rational) -> Fraction:
    """Representative of x modulo Z, taken in [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def degree_rep(c: Rational) -> Fraction:
    """Map a class representative in [0, 1) to the one in (-1, 0]."""
    c = Fraction(c)
    return c if c == 0 else c - 1


def in_fundamental_interval(d: Rational) -> bool:
    """True iff d lies in the filtration-degree interval (-1, 0]."""
    d = Fraction(d)
    return -1 < d <= 0


@dataclass(frozen=True)
class ValueClass:
    """A coset of (1/e)Z in Q, canonically represented in [0, 1/e).

    e = None models a virtual extension whose value group is all of Q:
    every value is then its own representative.
    """

    rep: Fraction
    e: int | None = 1


def class_of(r: Value | Rational, e: int | None = 1) -> ValueClass:
    """Canonical class of a value modulo (1/e)Z."""
    if isinstance(r, Value):
        if r.is_bottom:
            raise PreconditionError("bottom has no value class")
        r = r.mag
    r = Fraction(r)
    if e is None:
        return ValueClass(r, None)
    if not isinstance(e, int) or e < 1:
        raise PreconditionError(f"ramification index must be a positive int or None, got {e!r}")
    return ValueClass(frac_part(r * e) / e, e)
