"""Exit criteria. Each test prints one PASS/FAIL line, then asserts."""

import math
import subprocess
import sys
import time
from fractions import Fraction as F

import numpy as np
import pytest

from wheelweights import checks, genfun, geometry, mc, recursion

PRINTED_S_HAT = {
    2: F(1, 48),
    4: F(-1, 5760),
    6: F(1, 362880),
    8: F(-1, 19353600),
    10: F(1, 958003200),
    12: F(-691, 31384184832000),
}

WHEEL_SEED = 42
IDENTITY_SEED = 7


@pytest.fixture
def report(capsys):
    def emit(number, name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def test_1_bernoulli_exactness(report):
    start = time.perf_counter()
    s = genfun.bernoulli_modified(13)
    elapsed = time.perf_counter() - start
    ok = all(s[n] == v for n, v in PRINTED_S_HAT.items())
    ok &= all(s[n] == 0 for n in range(1, 13, 2))
    ok &= elapsed < 0.1
    report(1, "bernoulli exactness", ok, f"{elapsed * 1e3:.1f} ms")


def test_2_main_theorem_desk_scale(report):
    start = time.perf_counter()
    tables = recursion.RecursionTables()
    s_hat = genfun.bernoulli_modified(41)
    bad = []
    for n in range(2, 41):
        rec = recursion.weight_recursive(n, tables)
        closed = recursion.weight_closed(n)
        if rec != closed or closed != -(-1) ** (n * (n - 1) // 2) * n * s_hat[n]:
            bad.append(n)
        if n % 2 and rec != 0:
            bad.append(n)
    elapsed = time.perf_counter() - start
    report(2, "recursion == closed form, n <= 40", not bad and elapsed < 5, f"mismatch={bad} {elapsed:.2f} s")


def test_3_generating_function_coefficients(report):
    order = 40
    start = time.perf_counter()
    results = checks.series_suite(order)
    keys = ("a2_coefficients", "b1_coefficients", "sprime_coefficients", "w_series_two_way")
    elapsed = time.perf_counter() - start
    failed = [k for k in keys if not results[k]]
    report(3, "series coefficients match recursion", not failed and elapsed < 2, f"failed={failed} {elapsed:.2f} s")


def test_4_functional_equations(report):
    ok = {
        "a2": genfun.verify_a2_functional_equation(40),
        "b1": genfun.verify_b1_functional_equation(40),
        "main": genfun.verify_main_theorem(40),
    }
    report(4, "functional equations at order 40", all(ok.values()), str(ok))


@pytest.mark.slow
def test_5_mc_wheel_oracle(report):
    cfg = mc.MCConfig(samples=10_000_000, seed=WHEEL_SEED, chunk_size=50_000)
    start = time.perf_counter()
    est = mc.estimate_wheel_weight(2, cfg)
    elapsed = time.perf_counter() - start
    ok = abs(est.mean - 1 / 24) <= 3 * est.stderr and est.stderr < 0.005 and elapsed < 300
    report(
        5,
        "MC wheel n=2 vs 1/24",
        ok,
        f"mean={est.mean:.6f} stderr={est.stderr:.2e} mom={est.median_of_means:.6f} {elapsed:.1f} s",
    )


def test_6_mc_identities(report):
    cfg = mc.MCConfig(samples=1_000_000, seed=IDENTITY_SEED)
    lines = []
    ok = True
    for m in (1, 2, 3):
        est = mc.estimate_eq44(m, cfg)
        target = (2 * math.pi) ** (m + 1) * (0.5 - 1 / (m + 1))
        hit = abs(est.mean - target) <= 3 * est.stderr
        ok &= hit
        lines.append(f"eq44 m={m}: {est.mean:.4f}+-{est.stderr:.4f} vs {target:.4f}")
    est = mc.estimate_eq43(1j, 1 + 1j, 2, cfg)
    f = float(geometry.phi(1j, 1 + 1j))
    target = (2 * math.pi) ** 2 * f - 2 * math.pi * f**2
    ok &= abs(est.mean - target) <= 3 * est.stderr
    lines.append(f"eq43 m=2: {est.mean:.4f}+-{est.stderr:.4f} vs {target:.4f}")
    report(6, "MC identity suite", ok, "; ".join(lines))


def _configs(rng, count, n, min_sep=1e-3):
    out = []
    while len(out) < count:
        z = rng.standard_cauchy(n) + 1j * np.abs(rng.standard_cauchy(n))
        pts = np.append(z, 1j)
        gaps = np.abs(pts[:, None] - pts[None, :]) + np.eye(n + 1)
        if gaps.min() > min_sep:
            out.append(geometry.Configuration(tuple(z)))
    return out


def test_7_symmetry_suite(report):
    rng = np.random.default_rng(2024)
    worst = {}
    for n, sign in ((3, -1.0), (2, 1.0)):
        g = geometry.WheelGraph(n)
        rel = 0.0
        for c in _configs(rng, 1000, n):
            j = geometry.integrand_jacobian(g, c)
            jr = geometry.integrand_jacobian(g, c.reflected())
            rel = max(rel, abs(jr - sign * j) / max(abs(j), 1e-300))
        worst[n] = rel

    h = 1e-6
    grad_rel = 0.0
    for _ in range(1000):
        while True:
            u, v = rng.uniform(-3, 3, 2) + 1j * rng.uniform(0.1, 4, 2)
            if abs(u - v) > 0.05:
                break
        g = np.array(geometry.grad_phi(u, v))
        fd = []
        for du, dv in ((h, 0), (1j * h, 0), (0, h), (0, 1j * h)):
            d = geometry.phi(u + du, v + dv) - geometry.phi(u - du, v - dv)
            fd.append(((d + math.pi) % (2 * math.pi) - math.pi) / (2 * h))
        grad_rel = max(grad_rel, np.linalg.norm(np.array(fd) - g) / np.linalg.norm(g))

    ok = worst[3] < 1e-9 and worst[2] < 1e-9 and grad_rel < 1e-5
    report(
        7,
        "reflection symmetry and gradient",
        ok,
        f"n=3 rel={worst[3]:.1e} n=2 rel={worst[2]:.1e} grad rel={grad_rel:.1e}",
    )


def test_8_cli_determinism(report):
    def cli(*argv):
        return subprocess.run(
            [sys.executable, "-m", "wheelweights", *argv], capture_output=True, text=True, check=False
        ).stdout

    mc_args = ("verify", "mc", "--target", "wheel", "--n", "2", "--samples", "400000", "--seed", "11")
    outputs = {
        "weights": [cli("weights", "--max-n", "20", "--format", "json") for _ in range(2)],
        "series": [cli("verify", "series", "--order", "12") for _ in range(2)],
        "mc": [cli(*mc_args), cli(*mc_args, "--workers", "4"), cli(*mc_args, "--workers", "4")],
    }
    same = {k: len(set(v)) == 1 and bool(v[0]) for k, v in outputs.items()}
    report(8, "byte-identical CLI output", all(same.values()), str(same))
