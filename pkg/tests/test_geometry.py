import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wheelweights.geometry import (
    TWO_PI,
    Configuration,
    WheelGraph,
    grad_phi,
    integrand_jacobian,
    phi,
    reflect,
    wheel_jacobian,
    wheel_matrix,
)

coord = st.floats(-50, 50, allow_nan=False)
height = st.floats(1e-3, 50, allow_nan=False)


def random_points(rng, shape, min_sep=0.05):
    while True:
        z = rng.uniform(-3, 3, shape) + 1j * rng.uniform(0.1, 4, shape)
        flat = np.concatenate([np.reshape(z, (-1, shape[-1])), np.full((np.prod(shape[:-1]), 1), 1j)], axis=1)
        gaps = np.abs(flat[:, :, None] - flat[:, None, :]) + np.eye(flat.shape[1]) * 10
        if gaps.min() > min_sep:
            return z


def wrapped(d):
    return (d + np.pi) % TWO_PI - np.pi


def fd_grad(u, v, h=1e-6):
    out = []
    for du, dv in ((h, 0), (1j * h, 0), (0, h), (0, 1j * h)):
        out.append(wrapped(phi(u + du, v + dv) - phi(u - du, v - dv)) / (2 * h))
    return np.array(out)


# phi


def test_phi_vanishes_for_real_tail():
    for u in (-3.0, 0.0, 0.5, 17.0):
        assert phi(u, 0.3 + 2j) == 0.0


def test_phi_branch_sides():
    left = phi(1j, -1e-7 + 3j)
    right = phi(1j, 1e-7 + 3j)
    assert 0 < left < 1e-6
    assert TWO_PI - 1e-6 < right < TWO_PI
    assert phi(1j, 3j) == 0.0


def test_phi_known_value():
    expected = (np.pi - (np.pi - np.arctan(2.0))) % TWO_PI  # arg(-1) - arg(-1 + 2i)
    assert phi(1j, -1 + 1j) == pytest.approx(expected, rel=1e-12)
    assert phi(1j, -1 + 1j) == pytest.approx(1.10715, abs=1e-5)


def test_phi_rejects_coincident_points():
    with pytest.raises(ValueError):
        phi(1 + 1j, 1 + 1j)


@given(coord, height, coord, height)
def test_phi_range(a, b, c, d):
    u, v = complex(a, b), complex(c, d)
    if u != v:
        val = phi(u, v)
        assert 0.0 <= val < TWO_PI


def test_phi_reflection_law():
    rng = np.random.default_rng(3)
    u = random_points(rng, (500, 1))[:, 0]
    v = random_points(rng, (500, 1))[:, 0]
    off_ray = np.abs(u.real - v.real) > 1e-6
    lhs = phi(reflect(u[off_ray]), reflect(v[off_ray]))
    assert np.allclose(lhs, TWO_PI - phi(u[off_ray], v[off_ray]), rtol=0, atol=1e-12)


# grad_phi


def test_grad_matches_finite_differences_at_fixed_pair():
    g = np.array(grad_phi(1j, 1 + 2j))
    fd = fd_grad(1j, 1 + 2j)
    assert np.allclose(fd, g, rtol=1e-6, atol=0)


def test_grad_on_real_tail_slice():
    # phi(u, v) == 0 for real u: moving v, or moving u along the real axis, is flat
    _, _, dvx, dvy = grad_phi(0.7, -1 + 2j)
    dux, _, _, _ = grad_phi(0.7, -1 + 2j)
    assert dvx == pytest.approx(0, abs=1e-15)
    assert dvy == pytest.approx(0, abs=1e-15)
    assert dux == pytest.approx(0, abs=1e-15)


def test_grad_reflection_flips_sign():
    u, v = 0.3 + 0.8j, -1.1 + 2.5j
    g = np.array(grad_phi(u, v))
    gr = np.array(grad_phi(reflect(u), reflect(v)))
    # phi o alpha = 2 pi - phi; x-partials pick up a second sign from the reflection
    assert np.allclose(gr, [g[0], -g[1], g[2], -g[3]], rtol=1e-14)


def test_grad_vs_finite_differences_random_pairs():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(1000):
        u, v = random_points(rng, (1, 2))[0]
        g = np.array(grad_phi(u, v))
        fd = fd_grad(u, v)
        worst = max(worst, np.linalg.norm(fd - g) / np.linalg.norm(g))
    assert worst < 1e-5


# wheel


def test_wheel_edges():
    assert WheelGraph(3).edges == ((0, 1), (1, 2), (2, 0), ("w", 0), ("w", 1), ("w", 2))
    assert len(WheelGraph(5).edges) == 10
    with pytest.raises(ValueError):
        WheelGraph(1)


def test_configuration_validation():
    with pytest.raises(ValueError):
        Configuration((1 + 1j, 1 + 1j))
    with pytest.raises(ValueError):
        Configuration((1j, 2 + 1j))  # coincides with the hub
    with pytest.raises(ValueError):
        Configuration((1.0 + 0j, 2 + 1j))


def test_matrix_against_finite_differences():
    # built from phi alone, independent of grad_phi
    rng = np.random.default_rng(5)
    h = 1e-6
    for n in (2, 3, 4):
        z = random_points(rng, (1, n))[0]
        edges = WheelGraph(n).edges
        fd = np.zeros((2 * n, 2 * n))
        for col in range(2 * n):
            step = np.zeros(n, dtype=complex)
            step[col // 2] = h if col % 2 == 0 else 1j * h
            zp, zm = z + step, z - step
            for row, (a, b) in enumerate(edges):
                up, um = (1j, 1j) if a == "w" else (zp[a], zm[a])
                fd[row, col] = wrapped(phi(up, zp[b]) - phi(um, zm[b])) / (2 * h)
        assert np.allclose(wheel_matrix(z[None, :])[0], fd, rtol=1e-5, atol=1e-7)


def test_row_swap_antisymmetry():
    rng = np.random.default_rng(9)
    z = random_points(rng, (20, 3))
    mat = wheel_matrix(z)
    swapped = mat[:, [1, 0, 2, 3, 4, 5], :]
    assert np.allclose(np.linalg.det(swapped), -np.linalg.det(mat), rtol=1e-10)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cyclic_relabeling_invariance(n):
    # a cyclic shift permutes rim rows and spoke rows by n-cycles and moves
    # column pairs; the signs cancel
    rng = np.random.default_rng(n)
    z = random_points(rng, (50, n))
    shifted = np.roll(z, 1, axis=1)
    assert np.allclose(wheel_jacobian(shifted), wheel_jacobian(z), rtol=1e-9)


def test_odd_reflection_antisymmetry():
    rng = np.random.default_rng(21)
    for _ in range(100):
        c = Configuration(tuple(random_points(rng, (1, 3))[0]))
        g = WheelGraph(3)
        j, jr = integrand_jacobian(g, c), integrand_jacobian(g, c.reflected())
        assert jr == pytest.approx(-j, rel=1e-9)


def test_even_reflection_symmetry():
    rng = np.random.default_rng(22)
    for _ in range(100):
        c = Configuration(tuple(random_points(rng, (1, 2))[0]))
        g = WheelGraph(2)
        assert integrand_jacobian(g, c.reflected()) == pytest.approx(integrand_jacobian(g, c), rel=1e-9)


def test_integrand_rejects_bad_configurations():
    with pytest.raises(ValueError):
        integrand_jacobian(WheelGraph(2), Configuration((0.5 + 1j, 0.5 + 1j)))
    with pytest.raises(ValueError):
        integrand_jacobian(WheelGraph(3), Configuration((0.5 + 1j, 2 + 1j)))
