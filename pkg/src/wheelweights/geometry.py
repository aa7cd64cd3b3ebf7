"""Harmonic angle on the upper half-plane and the wheel integrand.

Points are Python/numpy complex numbers. The angle function is

    phi(u, v) = arg((v - u) / (v - conj(u)))  in [0, 2*pi),

which vanishes identically when ``u`` is real and jumps from 2*pi to 0 across
the vertical ray above ``u``. All array functions broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * np.pi

W_DEFAULT = 1j


def phi(u, v):
    """Harmonic angle of the geodesic from ``u`` to ``v``, in [0, 2*pi)."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if np.any(u == v):
        raise ValueError("phi(u, v) is undefined for u == v")
    q = (v - u) * np.conj(v - np.conj(u))
    out = np.mod(np.arctan2(q.imag, q.real), TWO_PI)
    # mod rounds a tiny negative angle up to exactly 2*pi
    out = np.minimum(out, np.nextafter(TWO_PI, 0.0))
    return out[()] if out.ndim == 0 else out


def grad_phi(u, v):
    """Partials of phi with respect to (Re u, Im u, Re v, Im v).

    Uses d arg(z) = (-Im z dx + Re z dy) / |z|^2 applied to v - u and
    v - conj(u). Valid off the branch ray, where the jump does not matter.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    d1 = v - u
    d2 = v - np.conj(u)
    r1 = d1.real * d1.real + d1.imag * d1.imag
    r2 = d2.real * d2.real + d2.imag * d2.imag
    dvx = -d1.imag / r1 + d2.imag / r2
    dvy = d1.real / r1 - d2.real / r2
    dux = -dvx
    duy = -d1.real / r1 - d2.real / r2
    return dux, duy, dvx, dvy


def reflect(z):
    """The reflection x + iy -> -x + iy."""
    return -np.conj(z)


@dataclass(frozen=True)
class WheelGraph:
    """The n-wheel with spokes pointing outward from the hub ``w``.

    Vertices ``0 .. n-1`` are z_1 .. z_n; the hub is ``"w"``. Edge order is
    the rim cycle followed by the spokes, which fixes the integrand's sign.
    """

    n: int
    edges: tuple = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a wheel needs at least 2 rim vertices")
        rim = tuple((k, (k + 1) % self.n) for k in range(self.n))
        spokes = tuple(("w", k) for k in range(self.n))
        object.__setattr__(self, "edges", rim + spokes)


@dataclass(frozen=True)
class Configuration:
    z: tuple[complex, ...]
    w: complex = W_DEFAULT

    def __post_init__(self):
        z = tuple(complex(p) for p in self.z)
        object.__setattr__(self, "z", z)
        pts = z + (complex(self.w),)
        if any(p.imag <= 0 for p in pts):
            raise ValueError("configuration points must lie in the open upper half-plane")
        if len(set(pts)) != len(pts):
            raise ValueError("configuration points must be pairwise distinct")

    def reflected(self) -> Configuration:
        return Configuration(tuple(-p.conjugate() for p in self.z), -self.w.conjugate())


def wheel_matrix(z: np.ndarray, w: complex = W_DEFAULT) -> np.ndarray:
    """Batch of 2n x 2n derivative matrices for configurations ``z`` of shape (N, n).

    Row e is the gradient of phi along edge e (wheel order); columns are
    (x_1, y_1, ..., x_n, y_n). The hub is fixed, so spokes only feel their head.
    """
    z = np.atleast_2d(np.asarray(z, dtype=complex))
    batch, n = z.shape
    mat = np.zeros((batch, 2 * n, 2 * n))
    for row, (a, b) in enumerate(WheelGraph(n).edges):
        if a == "w":
            _, _, dvx, dvy = grad_phi(w, z[:, b])
        else:
            dux, duy, dvx, dvy = grad_phi(z[:, a], z[:, b])
            mat[:, row, 2 * a] = dux
            mat[:, row, 2 * a + 1] = duy
        mat[:, row, 2 * b] += dvx
        mat[:, row, 2 * b + 1] += dvy
    return mat


def wheel_jacobian(z: np.ndarray, w: complex = W_DEFAULT) -> np.ndarray:
    """Integrand density of the wheel form at each configuration in ``z``."""
    return np.linalg.det(wheel_matrix(z, w))


def integrand_jacobian(g: WheelGraph, c: Configuration) -> float:
    if len(c.z) != g.n:
        raise ValueError(f"configuration has {len(c.z)} points, graph needs {g.n}")
    return float(wheel_jacobian(np.array([c.z]), c.w)[0])
