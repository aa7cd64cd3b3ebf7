"""Monte Carlo oracle for the wheel weights and the two angle-form identities.

Every estimate is an importance-sampled average of a Jacobian density over
points of the upper half-plane drawn with ``Re z ~ Cauchy`` and
``Im z ~ |Cauchy|`` (independent per point). Samples are split into chunks;
chunk ``i`` draws from its own generator seeded by ``SeedSequence(seed,
spawn_key=(i,))`` so the result does not depend on how chunks are scheduled.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import geometry
from .geometry import TWO_PI, W_DEFAULT

PROPOSALS = ("cauchy_halfcauchy",)

WHEEL_N_SUPPORTED = (2, 3, 4, 5)

# guard against a pathological configuration that keeps landing on bad points
_MAX_RESAMPLE_ROUNDS = 100


@dataclass(frozen=True)
class MCConfig:
    samples: int = 1_000_000
    seed: int = 42
    chunk_size: int = 50_000
    proposal: str = "cauchy_halfcauchy"
    antithetic: bool = False

    def __post_init__(self):
        if self.samples < 1 or self.chunk_size < 1:
            raise ValueError("samples and chunk_size must be positive")
        if self.samples < self.chunk_size:
            raise ValueError("samples must be at least chunk_size")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.proposal not in PROPOSALS:
            raise ValueError(f"unknown proposal {self.proposal!r}")
        if self.antithetic and self.chunk_size % 2:
            raise ValueError("antithetic pairing needs an even chunk_size")

    @property
    def n_chunks(self) -> int:
        return -(-self.samples // self.chunk_size)

    def chunk_sizes(self) -> list[int]:
        sizes = [self.chunk_size] * (self.samples // self.chunk_size)
        if self.samples % self.chunk_size:
            sizes.append(self.samples % self.chunk_size)
        return sizes

    def chunk_rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(index,)))


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    median_of_means: float
    samples: int
    seed: int
    resampled: int
    chunks: int
    target: float | None = None
    target_exact: Fraction | None = None

    @property
    def stderr_defined(self) -> bool:
        return self.chunks > 1

    def within(self, k: float = 3.0) -> bool:
        """|mean - target| <= k * stderr; false without a target or error bar."""
        if self.target is None or not self.stderr_defined:
            return False
        return abs(self.mean - self.target) <= k * self.stderr

    def to_dict(self) -> dict:
        return {
            "target_num": None if self.target_exact is None else self.target_exact.numerator,
            "target_den": None if self.target_exact is None else self.target_exact.denominator,
            "target": self.target,
            "mean": self.mean,
            "stderr": self.stderr if self.stderr_defined else None,
            "median_of_means": self.median_of_means,
            "samples": self.samples,
            "seed": self.seed,
            "resampled": self.resampled,
        }


# proposal


def sample_points(rng: np.random.Generator, shape) -> np.ndarray:
    x = rng.standard_cauchy(shape)
    y = np.abs(rng.standard_cauchy(shape))
    return x + 1j * y


def proposal_density(z: np.ndarray) -> np.ndarray:
    """Joint density of the points along the last axis (product over points)."""
    x, y = z.real, z.imag
    dens = 2.0 / (np.pi**2 * (1.0 + x * x) * (1.0 + y * y))
    return np.prod(np.atleast_1d(dens), axis=-1) if np.ndim(z) > 1 else dens


def _draw(rng, size, points, is_bad):
    """Draw ``size`` configurations of ``points`` points, redrawing bad rows."""
    z = sample_points(rng, (size, points))
    bad = is_bad(z)
    resampled = 0
    for _ in range(_MAX_RESAMPLE_ROUNDS):
        count = int(bad.sum())
        if not count:
            return z, resampled
        resampled += count
        z[bad] = sample_points(rng, (count, points))
        bad = is_bad(z)
    raise RuntimeError("resampling did not converge")


def _collides(z: np.ndarray, others=()) -> np.ndarray:
    bad = np.any(z.imag <= 0, axis=1)
    n = z.shape[1]
    for i in range(n):
        for p in others:
            bad |= z[:, i] == p
        for j in range(i + 1, n):
            bad |= z[:, i] == z[:, j]
    return bad


def _on_ray(z: np.ndarray, base: complex) -> np.ndarray:
    return (z.real == base.real) & (z.imag > base.imag)


# integrand tasks; module-level classes so that worker processes can unpickle them


@dataclass(frozen=True)
class WheelTask:
    n: int
    w: complex = W_DEFAULT
    antithetic: bool = False

    def _bad(self, z):
        return _collides(z, (self.w,))

    def __call__(self, rng, size):
        scale = TWO_PI ** (2 * self.n)
        if self.antithetic:
            z, resampled = _draw(rng, size // 2, self.n, self._bad)
            p = proposal_density(z)
            j = geometry.wheel_jacobian(z, self.w)
            jr = geometry.wheel_jacobian(geometry.reflect(z), self.w)
            values = (j / p + jr / p) / (2.0 * scale)
        else:
            z, resampled = _draw(rng, size, self.n, self._bad)
            values = geometry.wheel_jacobian(z, self.w) / proposal_density(z) / scale
        return values, resampled


@dataclass(frozen=True)
class Eq43Task:
    """Density of d(phi(z1, z)^m) ^ d phi(z, z2) over z."""

    z1: complex
    z2: complex
    m: int

    def _bad(self, z):
        return _collides(z, (self.z1, self.z2)) | _on_ray(z[:, 0], self.z1)

    def __call__(self, rng, size):
        z, resampled = _draw(rng, size, 1, self._bad)
        z = z[:, 0]
        _, _, ax, ay = geometry.grad_phi(self.z1, z)
        bx, by, _, _ = geometry.grad_phi(z, self.z2)
        power = self.m * geometry.phi(self.z1, z) ** (self.m - 1)
        values = power * (ax * by - ay * bx) / proposal_density(z)
        return values, resampled


def eq44_task(m: int, w: complex = W_DEFAULT) -> Eq43Task:
    # the w = z1 = z2 case of the same two-form
    return Eq43Task(w, w, m)


# driver


def _run_one(args):
    task, cfg, index, size = args
    values, resampled = task(cfg.chunk_rng(index), size)
    return float(np.sum(values)), len(values), resampled


def run_chunked(task, cfg: MCConfig, workers: int = 1) -> MCEstimate:
    """Evaluate ``task`` chunk by chunk and reduce in chunk-index order.

    ``task(rng, size)`` returns ``(values, resampled)``. The estimate is
    identical for any ``workers`` because every chunk owns its seed and the
    reduction order is fixed.
    """
    jobs = [(task, cfg, i, size) for i, size in enumerate(cfg.chunk_sizes())]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    sums = np.array([r[0] for r in results])
    counts = np.array([r[1] for r in results])
    means = sums / counts
    k = len(means)
    stderr = float(np.std(means, ddof=1) / math.sqrt(k)) if k > 1 else math.nan
    return MCEstimate(
        mean=float(math.fsum(sums) / counts.sum()),
        stderr=stderr,
        median_of_means=float(np.median(means)),
        samples=cfg.samples,
        seed=cfg.seed,
        resampled=int(sum(r[2] for r in results)),
        chunks=k,
    )


def _with_target(est: MCEstimate, target: float, exact: Fraction | None = None) -> MCEstimate:
    return replace(est, target=float(target), target_exact=exact)


def estimate_wheel_weight(
    n: int, cfg: MCConfig, workers: int = 1, reference: Fraction | None = None
) -> MCEstimate:
    """Estimate w_n as (2 pi)^(-2n) E[J(z) / p(z)] with the hub pinned at i."""
    if n not in WHEEL_N_SUPPORTED:
        raise ValueError(f"wheel estimate supported for n in {WHEEL_N_SUPPORTED}, got {n}")
    est = run_chunked(WheelTask(n, antithetic=cfg.antithetic), cfg, workers)
    if reference is None:
        from .recursion import weight_recursive

        reference = weight_recursive(n)
    return _with_target(est, float(reference), Fraction(reference))


def eq44_target(m: int) -> float:
    return TWO_PI ** (m + 1) * (0.5 - 1.0 / (m + 1))


def eq43_target(z1: complex, z2: complex, m: int) -> float:
    f = float(geometry.phi(z1, z2))
    return TWO_PI**m * f - TWO_PI * f**m


def estimate_eq44(m: int, cfg: MCConfig, workers: int = 1, w: complex = W_DEFAULT) -> MCEstimate:
    if m < 1:
        raise ValueError("m must be at least 1")
    est = run_chunked(eq44_task(m, w), cfg, workers)
    return _with_target(est, eq44_target(m))


def estimate_eq43(
    z1: complex, z2: complex, m: int, cfg: MCConfig, workers: int = 1
) -> MCEstimate:
    if m < 1:
        raise ValueError("m must be at least 1")
    if z1 == z2:
        raise ValueError("z1 and z2 must differ")
    est = run_chunked(Eq43Task(complex(z1), complex(z2), m), cfg, workers)
    return _with_target(est, eq43_target(z1, z2, m))
