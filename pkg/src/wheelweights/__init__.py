"""Kontsevich weights of the outward-spoke wheel graphs, three ways."""

from .exact import LaurentSeries, Rational
from .genfun import bernoulli_modified
from .mc import MCConfig, MCEstimate, estimate_eq43, estimate_eq44, estimate_wheel_weight
from .recursion import alpha, beta_hat, weight_closed, weight_recursive

__all__ = [
    "LaurentSeries",
    "MCConfig",
    "MCEstimate",
    "Rational",
    "alpha",
    "bernoulli_modified",
    "beta_hat",
    "estimate_eq43",
    "estimate_eq44",
    "estimate_wheel_weight",
    "weight_closed",
    "weight_recursive",
]
