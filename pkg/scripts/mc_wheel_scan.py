"""Monte Carlo estimates of small wheel weights against the exact values.

Prints one row per (n, sample count) with the z-score of the estimate.

    python scripts/mc_wheel_scan.py --n 2 3 4 --samples 100000 1000000
"""

import argparse
import time

from wheelweights import mc


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--samples", type=int, nargs="+", default=[100_000, 1_000_000])
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--antithetic", action="store_true")
    args = parser.parse_args()

    print(f"{'n':>2} {'samples':>9} {'exact':>11} {'mean':>11} {'stderr':>9} {'mom':>11} {'z':>6} {'sec':>6}")
    for n in args.n:
        for samples in args.samples:
            chunk = min(50_000, samples // 10)
            cfg = mc.MCConfig(samples=samples, seed=args.seed, chunk_size=chunk, antithetic=args.antithetic)
            start = time.perf_counter()
            est = mc.estimate_wheel_weight(n, cfg, workers=args.workers)
            elapsed = time.perf_counter() - start
            z = (est.mean - est.target) / est.stderr if est.stderr else float("nan")
            print(
                f"{n:>2} {samples:>9} {est.target:>11.3e} {est.mean:>11.3e} {est.stderr:>9.2e}"
                f" {est.median_of_means:>11.3e} {z:>6.2f} {elapsed:>6.1f}"
            )


if __name__ == "__main__":
    main()
