"""Closed-form generating functions as truncated Laurent series.

Every series here is built from exponentials by exact series arithmetic and
returned known below ``x**order``. Builders work a few terms deeper than asked
because dividing by ``x`` (or by ``e^x - 1``) costs precision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import (
    DEFAULT_ORDER,
    LaurentSeries,
    exp_linear,
    series_exp,
    series_log,
    x_series,
)

# extra terms carried internally so that poles and divisions by x do not
# eat into the requested order
_SLACK = 4


class SeriesName(str, enum.Enum):
    A2 = "A2"
    A2PRIME = "A2prime"
    B1 = "B1"
    S = "S"
    SPRIME = "Sprime"
    T = "T"
    WSERIES = "WSeries"
    BERNOULLI_GEN = "BernoulliGen"


@dataclass(frozen=True)
class NamedSeries:
    name: SeriesName
    series: LaurentSeries
    order: int

    def coefficient(self, n: int) -> Fraction:
        return self.series.coefficient(n)


class SeriesMismatchError(ArithmeticError):
    """Two constructions of the same series disagree."""


def _named(name: SeriesName, s: LaurentSeries, order: int) -> NamedSeries:
    return NamedSeries(name, s.truncate(order), order)


def _x(order: int) -> LaurentSeries:
    return x_series(order + _SLACK)


def _e(scale, order: int) -> LaurentSeries:
    return exp_linear(scale, order + _SLACK)


def bernoulli_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """(1/2) log((e^(x/2) - e^(-x/2)) / x)."""
    work = order + _SLACK
    half = x_series(work) / 2
    sinh2 = series_exp(half) - series_exp(-half)
    g = series_log(sinh2 / x_series(work)) / 2
    return _named(SeriesName.BERNOULLI_GEN, g, order)


def bernoulli_modified(order: int = DEFAULT_ORDER) -> list[Fraction]:
    """Modified Bernoulli numbers of degree 0 .. order-1."""
    if order < 2:
        raise ValueError("order must be at least 2")
    g = bernoulli_series(order)
    return [g.coefficient(n) for n in range(order)]


def a2_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """-1/x + 1/(1 - e^(-x)); coefficient n is alpha_tilde(n, 2)."""
    if order < 2:
        raise ValueError("order must be at least 2")
    x = _x(order)
    a2 = -1 / x + 1 / (1 - _e(-1, order))
    return _named(SeriesName.A2, a2, order)


def a2prime_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """A2 with its constant term removed, from its own closed form."""
    x = _x(order)
    em = _e(-1, order)
    a2p = -1 / x + (1 + em) / (2 * (1 - em))
    return _named(SeriesName.A2PRIME, a2p, order)


def t_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """-x e^(-x) - e^(-x) + 1 = x^2/2! - 2x^3/3! + ..."""
    x = _x(order)
    em = _e(-1, order)
    return _named(SeriesName.T, -x * em - em + 1, order)


def s_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """Generating function of the s_n sums, including the n = 0, 1 terms."""
    if order < 4:
        raise ValueError("order must be at least 4")
    x = _x(order)
    e1, e2 = _e(1, order), _e(2, order)
    num = (x - 4) * e2 + (2 * x * x - 3 * x + 8) * e1 + (2 * x - 4)
    den = 2 * (e1 - 1) * x
    return _named(SeriesName.S, num / den, order)


def sprime_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """S + 3/2, from its own closed form."""
    if order < 4:
        raise ValueError("order must be at least 4")
    x = _x(order)
    e1, e2 = _e(1, order), _e(2, order)
    num = (x - 4) * e2 + (2 * x * x + 8) * e1 - x - 4
    den = 2 * (e1 - 1) * x
    return _named(SeriesName.SPRIME, num / den, order)


def b1_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """((x - 2) e^x + x + 2) / (4 (e^x - 1)); coefficient n is beta_tilde(n, 1)."""
    if order < 3:
        raise ValueError("order must be at least 3")
    x = _x(order)
    e1 = _e(1, order)
    b1 = ((x - 2) * e1 + x + 2) / (4 * (e1 - 1))
    return _named(SeriesName.B1, b1, order)


def w_series_closed(order: int = DEFAULT_ORDER) -> LaurentSeries:
    x = _x(order)
    em = _e(-1, order)
    return (((x + 2) * em + x - 2) / (4 * (em - 1))).truncate(order)


def w_series_assembled(order: int = DEFAULT_ORDER) -> LaurentSeries:
    b1 = b1_series(order + 1).series
    a2p = a2prime_series(order + 1).series
    return (b1 - a2p.shift(1)).truncate(order)


def w_series(order: int = DEFAULT_ORDER) -> NamedSeries:
    """Series whose x^n coefficient is (-1)^(n(n-1)/2) w_n.

    Built twice, from the closed form and as B1 - x*A2'; the two must agree.
    """
    if order < 3:
        raise ValueError("order must be at least 3")
    closed = w_series_closed(order)
    assembled = w_series_assembled(order)
    if not closed.agrees_with(assembled, order):
        raise SeriesMismatchError("closed and assembled weight series differ")
    return NamedSeries(SeriesName.WSERIES, closed, order)


def s_via_t(n: int, order: int | None = None) -> Fraction:
    """s_n = (-1)^(n-1) (T A2)[x^n] + alpha_tilde(0,2)/n! + (n-2)/(n+1)!.

    Serves as the definition of s_0 and s_1.
    """
    order = max(order or 0, n + 1, 2)
    ta2 = t_series(order).series * a2_series(order).series
    sign = -1 if (n - 1) % 2 else 1
    return (
        sign * ta2.coefficient(n)
        + Fraction(1, 2) / factorial(n)
        + Fraction(n - 2, factorial(n + 1))
    )


def verify_a2_functional_equation(
    order: int = DEFAULT_ORDER, a2: LaurentSeries | None = None
) -> bool:
    """A2 = ((e^-x - 1 + x)/x) A2 + (e^-x - 1 + x)/x^2, coefficientwise."""
    a2 = a2_series(order).series if a2 is None else a2
    x = _x(order)
    q = _e(-1, order) - 1 + x
    rhs = (q / x) * a2 + q / (x * x)
    return a2.agrees_with(rhs, order)


def verify_b1_functional_equation(
    order: int = DEFAULT_ORDER,
    b1: LaurentSeries | None = None,
    sprime: LaurentSeries | None = None,
) -> bool:
    """(1 + (e^x - 1)/2) B1 = S'/2 + (x/8 - 1/2 + 1/x) e^x - 1/x - 1/2 - x/8."""
    b1 = b1_series(order).series if b1 is None else b1
    sprime = sprime_series(order).series if sprime is None else sprime
    x = _x(order)
    e1 = _e(1, order)
    lhs = (1 + (e1 - 1) / 2) * b1
    rhs = (
        sprime / 2
        + (x / 8 - Fraction(1, 2) + 1 / x) * e1
        - 1 / x
        - Fraction(1, 2)
        - x / 8
    )
    return lhs.agrees_with(rhs, order)


def verify_main_theorem(
    order: int = DEFAULT_ORDER, w: LaurentSeries | None = None
) -> bool:
    """Signed-weight series equals -x times the derivative of the Bernoulli series.

    Coefficientwise this reads (-1)^(n(n-1)/2) w_n = -n s_hat_n.
    """
    w = w_series(order).series if w is None else w
    g = bernoulli_series(order + 1).series
    rhs = -(g.derivative().shift(1))
    return w.agrees_with(rhs, order)
