"""Exact rationals and truncated Laurent series over the rationals.

Rationals are :class:`fractions.Fraction`. A :class:`LaurentSeries` stores the
coefficients of ``x**valuation`` up to (but excluding) ``x**order``; every
exponent at or above ``order`` is unknown. Results of arithmetic carry the
order that is actually justified by the operands, so an expression that
divides by ``x`` loses one term of precision and says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction

DEFAULT_ORDER = 40

Scalar = Union[int, Fraction]


class TruncationError(ValueError):
    """A coefficient was requested at or beyond the known order."""


class SeriesDomainError(ValueError):
    """An operation's precondition on its series argument does not hold."""


@dataclass(frozen=True)
class LaurentSeries:
    valuation: int
    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if self.valuation + len(coeffs) > self.order:
            # silently drop what lies beyond the known order
            coeffs = coeffs[: max(self.order - self.valuation, 0)]
        if self.valuation > self.order:
            object.__setattr__(self, "valuation", self.order)
            coeffs = ()
        coeffs = coeffs + (Fraction(0),) * (self.order - self.valuation - len(coeffs))
        # strip leading zeros, raising the valuation
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        object.__setattr__(self, "valuation", self.valuation + k)
        object.__setattr__(self, "coefficients", coeffs[k:])

    # construction

    @classmethod
    def from_coefficients(
        cls, coeffs: Iterable[Scalar], order: int, valuation: int = 0
    ) -> LaurentSeries:
        return cls(valuation, tuple(Fraction(c) for c in coeffs), order)

    @classmethod
    def constant(cls, c: Scalar, order: int = DEFAULT_ORDER) -> LaurentSeries:
        return cls(0, (Fraction(c),), order)

    @classmethod
    def monomial(
        cls, exponent: int, order: int = DEFAULT_ORDER, c: Scalar = 1
    ) -> LaurentSeries:
        return cls(exponent, (Fraction(c),), order)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> LaurentSeries:
        return cls(order, (), order)

    # inspection

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, n: int) -> Fraction:
        if n >= self.order:
            raise TruncationError(
                f"coefficient of x^{n} unknown: series is known below x^{self.order}"
            )
        if n < self.valuation:
            return Fraction(0)
        return self.coefficients[n - self.valuation]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def dense(self, start: int, stop: int) -> list[Fraction]:
        """Coefficients of x^start .. x^(stop-1)."""
        return [self.coefficient(n) for n in range(start, stop)]

    def truncate(self, order: int) -> LaurentSeries:
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return LaurentSeries(self.valuation, self.coefficients, order)

    def agrees_with(self, other: LaurentSeries, order: int | None = None) -> bool:
        """Coefficientwise equality below ``order`` (default: common known order)."""
        top = min(self.order, other.order) if order is None else order
        low = min(self.valuation, other.valuation, top)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(low, top))

    # arithmetic

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, tuple(-c for c in self.coefficients), self.order)

    def __add__(self, other) -> LaurentSeries:
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return series_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentSeries:
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return series_add(self, -other)

    def __rsub__(self, other) -> LaurentSeries:
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return series_add(other, -self)

    def __mul__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return LaurentSeries(self.valuation, tuple(c * a for a in self.coefficients), self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series divided by zero scalar")
            c = 1 / Fraction(other)
            return LaurentSeries(self.valuation, tuple(c * a for a in self.coefficients), self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return series_div(self, other)

    def __rtruediv__(self, other) -> LaurentSeries:
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return series_div(other, self)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by x**k (exact, moves the order along)."""
        return LaurentSeries(self.valuation + k, self.coefficients, self.order + k)

    def derivative(self) -> LaurentSeries:
        coeffs = [
            (self.valuation + i) * c for i, c in enumerate(self.coefficients)
        ]
        return LaurentSeries(self.valuation - 1, tuple(coeffs), self.order - 1)

    def __repr__(self) -> str:
        terms = [
            f"{c}*x^{self.valuation + i}"
            for i, c in enumerate(self.coefficients)
            if c != 0
        ]
        body = " + ".join(terms[:8]) or "0"
        if len(terms) > 8:
            body += " + ..."
        return f"LaurentSeries({body} + O(x^{self.order}))"


def _coerce(value, order: int):
    if isinstance(value, LaurentSeries):
        return value
    if isinstance(value, (int, Fraction)):
        # scalars are exact: give them an order that never limits the result
        return LaurentSeries.constant(value, max(order, 1))
    return NotImplemented


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    order = min(a.order, b.order)
    low = min(a.valuation, b.valuation, order)
    coeffs = tuple(a.coefficient(n) + b.coefficient(n) for n in range(low, order))
    return LaurentSeries(low, coeffs, order)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    order = min(a.valuation + b.order, b.valuation + a.order)
    if a.is_zero() or b.is_zero():
        return LaurentSeries.zero(order)
    val = a.valuation + b.valuation
    size = order - val
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(size):
        s = Fraction(0)
        for i in range(max(0, k - len(bc) + 1), min(k, len(ac) - 1) + 1):
            s += ac[i] * bc[k - i]
        out.append(s)
    return LaurentSeries(val, tuple(out), order)


def _reciprocal_unit(u: tuple[Fraction, ...], size: int) -> list[Fraction]:
    # u[0] != 0; returns the first `size` coefficients of 1/u
    inv0 = 1 / u[0]
    r = [inv0]
    for k in range(1, size):
        s = Fraction(0)
        for i in range(1, min(k, len(u) - 1) + 1):
            s += u[i] * r[k - i]
        r.append(-s * inv0)
    return r


def series_div(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if b.is_zero():
        raise ZeroDivisionError(
            f"division by a series that vanishes below x^{b.order}"
        )
    rel = b.order - b.valuation
    inv = LaurentSeries(-b.valuation, tuple(_reciprocal_unit(b.coefficients, rel)), rel - b.valuation)
    return series_mul(a, inv)


def series_exp(a: LaurentSeries) -> LaurentSeries:
    if a.valuation < 1:
        raise SeriesDomainError("exp needs a series with zero constant term")
    order = a.order
    if order <= 0:
        return LaurentSeries.zero(order)
    e = [Fraction(1)]
    for n in range(1, order):
        s = Fraction(0)
        for k in range(a.valuation, n + 1):
            s += k * a.coefficient(k) * e[n - k]
        e.append(s / n)
    return LaurentSeries(0, tuple(e), order)


def series_log(a: LaurentSeries) -> LaurentSeries:
    if a.valuation != 0 or a.coefficients[0] != 1:
        raise SeriesDomainError("log needs a series with constant term 1")
    order = a.order
    c = [a.coefficient(n) for n in range(order)]
    l = [Fraction(0)]
    for n in range(1, order):
        s = Fraction(0)
        for k in range(1, n):
            s += k * l[k] * c[n - k]
        l.append(c[n] - s / n)
    return LaurentSeries(0, tuple(l), order)


def coefficient(a: LaurentSeries, n: int) -> Fraction:
    return a.coefficient(n)


def x_series(order: int = DEFAULT_ORDER) -> LaurentSeries:
    return LaurentSeries.monomial(1, order)


def exp_linear(scale: Scalar = 1, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """e^(scale*x), built from the defining series."""
    s = Fraction(scale)
    return LaurentSeries(0, tuple(s**n / factorial(n) for n in range(order)), order)
