"""Series identity suite shared by the CLI and the tests."""

from __future__ import annotations

from fractions import Fraction

from . import genfun, recursion

FAULTS = ("a2", "b1", "w")


def _perturb(series, n):
    return series + series.__class__.monomial(n, series.order, Fraction(1))


def series_suite(order: int, fault: str | None = None) -> dict[str, bool]:
    """Run every generating-function identity to ``order``.

    ``fault`` corrupts one coefficient of the named series before the checks
    that consume it; the suite must then report a failure.
    """
    if order < 4:
        raise ValueError("order must be at least 4")
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    tables = recursion.RecursionTables()
    a2 = genfun.a2_series(order).series
    b1 = genfun.b1_series(order).series
    sprime = genfun.sprime_series(order).series
    s = genfun.s_series(order).series
    if fault == "a2":
        a2 = _perturb(a2, 3)
    elif fault == "b1":
        b1 = _perturb(b1, 2)

    closed = genfun.w_series_closed(order)
    assembled = genfun.w_series_assembled(order)
    if fault == "w":
        closed = _perturb(closed, 2)

    return {
        "a2_coefficients": all(
            a2.coefficient(n) == recursion.alpha_tilde(n, 2, tables) for n in range(order)
        ),
        "b1_coefficients": all(
            b1.coefficient(n) == recursion.beta_tilde(n, 1, tables) for n in range(2, order)
        )
        and b1.coefficient(0) == 0
        and b1.coefficient(1) == 0,
        "sprime_coefficients": all(
            sprime.coefficient(n) == recursion.s_sum(n, tables) for n in range(2, order)
        ),
        "sprime_is_s_plus_3_2": sprime.agrees_with(s + Fraction(3, 2), order),
        "s_via_t_formula": all(
            genfun.s_via_t(n, order) == s.coefficient(n) for n in range(order)
        ),
        "a2_functional_equation": genfun.verify_a2_functional_equation(order, a2),
        "b1_functional_equation": genfun.verify_b1_functional_equation(order, b1),
        "w_series_two_way": closed.agrees_with(assembled, order),
        "main_theorem": genfun.verify_main_theorem(order, closed),
    }
