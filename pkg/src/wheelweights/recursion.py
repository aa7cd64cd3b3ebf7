"""Exact recursions for the wheel weights.

The auxiliary integrals ``alpha(n, m)`` and the combination ``beta_hat(n, m)``
are generated from their initial rows by rational recurrences; the weight of
the n-wheel then follows as ``beta_hat(n, 1) - alpha(n - 1, 2) / 2`` for even
``n``. Only the combination ``beta_hat`` is computable, which is why the
separate boundary terms it is built from are not exposed here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import genfun


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _triangular_sign(n: int) -> int:
    return _sign(n * (n + 1) // 2)


class RecursionTables:
    """Lazily filled memo tables keyed by ``(n, m)``.

    ``beta_hat(n, m)`` reaches back to ``(2, m + n - 2)`` so the tables grow as
    triangles, not rectangles. Dict insertion of an immutable ``Fraction`` is
    atomic, so sharing one instance between threads only risks duplicate work.
    """

    def __init__(self):
        self.alpha: dict[tuple[int, int], Fraction] = {}
        self.beta_hat: dict[tuple[int, int], Fraction] = {}

    def get_alpha(self, n: int, m: int) -> Fraction:
        if n < 0 or m < 1:
            raise ValueError(f"alpha({n}, {m}) needs n >= 0 and m >= 1")
        key = (n, m)
        value = self.alpha.get(key)
        if value is not None:
            return value
        if n == 0:
            value = Fraction(1)
        else:
            value = _sign(n) * (
                Fraction(1, 2) * self.get_alpha(n - 1, 2)
                - Fraction(1, m + 1) * self.get_alpha(n - 1, m + 1)
            )
        self.alpha[key] = value
        return value

    def get_beta_hat(self, n: int, m: int) -> Fraction:
        if n < 2 or m < 1:
            raise ValueError(f"beta_hat({n}, {m}) needs n >= 2 and m >= 1")
        key = (n, m)
        value = self.beta_hat.get(key)
        if value is not None:
            return value
        if n == 2:
            value = Fraction(-1, 8) + Fraction(1, m + 1) * (
                Fraction(1, 2) - Fraction(1, m + 2)
            )
        else:
            value = (
                -Fraction(1, 2 * (m + 1)) * self.get_alpha(n - 1, m + 1)
                + _sign(n + 1) * Fraction(1, 2) * self.get_beta_hat(n - 1, 1)
                + _sign(n) * Fraction(1, m + 1) * self.get_beta_hat(n - 1, m + 1)
            )
        self.beta_hat[key] = value
        return value


_TABLES = RecursionTables()


def alpha(n: int, m: int, tables: RecursionTables | None = None) -> Fraction:
    return (tables or _TABLES).get_alpha(n, m)


def alpha_tilde(n: int, m: int, tables: RecursionTables | None = None) -> Fraction:
    return _triangular_sign(n) * alpha(n, m, tables) / factorial(m)


def beta_hat(n: int, m: int, tables: RecursionTables | None = None) -> Fraction:
    return (tables or _TABLES).get_beta_hat(n, m)


def beta_tilde(n: int, m: int, tables: RecursionTables | None = None) -> Fraction:
    return _triangular_sign(n) * beta_hat(n, m, tables) / factorial(m)


def s_sum(n: int, tables: RecursionTables | None = None) -> Fraction:
    """Alternating sum of alpha_tilde(j, n + 1 - j) for j = n-1 down to 2."""
    if n < 2:
        raise ValueError("s_sum is defined for n >= 2")
    return sum(
        (_sign(j) * alpha_tilde(j, n + 1 - j, tables) for j in range(2, n)),
        Fraction(0),
    )


def weight_recursive(n: int, tables: RecursionTables | None = None) -> Fraction:
    if n < 2:
        raise ValueError("wheel weights are defined for n >= 2")
    if n % 2:
        return Fraction(0)
    return beta_hat(n, 1, tables) - Fraction(1, 2) * alpha(n - 1, 2, tables)


def weight_closed(n: int) -> Fraction:
    """Weight from the modified Bernoulli number of the same degree."""
    if n < 2:
        raise ValueError("wheel weights are defined for n >= 2")
    s_hat = genfun.bernoulli_modified(n + 1)[n]
    return -_sign(n * (n - 1) // 2) * n * s_hat


def weight_genfun(n: int) -> Fraction:
    """Weight read off the assembled generating function of signed weights."""
    if n < 2:
        raise ValueError("wheel weights are defined for n >= 2")
    w = genfun.w_series(n + 1).series
    return _sign(n * (n - 1) // 2) * w.coefficient(n)


class Method(str, enum.Enum):
    RECURSION = "recursion"
    CLOSED = "closed"
    GENFUN = "genfun"


@dataclass
class WeightTable:
    """Exact weights, one row per n, each row holding every method computed."""

    entries: dict[int, dict[Method, Fraction]] = field(default_factory=dict)

    def add(self, n: int, method: Method, value: Fraction) -> None:
        self.entries.setdefault(n, {})[Method(method)] = value

    def value(self, n: int) -> Fraction:
        return next(iter(self.entries[n].values()))

    def agrees(self, n: int) -> bool:
        return len(set(self.entries[n].values())) <= 1

    def all_agree(self) -> bool:
        return all(self.agrees(n) for n in self.entries)


def weight_table(max_n: int, methods=tuple(Method)) -> WeightTable:
    """Weights for 2 <= n <= max_n, computed by each requested method.

    The closed and generating-function routes share one series expansion
    to order ``max_n + 1`` instead of rebuilding it per row.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    methods = [Method(m) for m in methods]
    table = WeightTable()
    tables = RecursionTables()
    s_hat = genfun.bernoulli_modified(max_n + 1) if Method.CLOSED in methods else None
    w = genfun.w_series(max_n + 1).series if Method.GENFUN in methods else None
    for n in range(2, max_n + 1):
        sign = _sign(n * (n - 1) // 2)
        for method in methods:
            if method is Method.RECURSION:
                value = weight_recursive(n, tables)
            elif method is Method.CLOSED:
                value = -sign * n * s_hat[n]
            else:
                value = sign * w.coefficient(n)
            table.add(n, method, value)
    return table
