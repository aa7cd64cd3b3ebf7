"""Seed sweep for the single-point angle identities.

Runs the hub identity for several m and seeds and reports how often the
estimate lands within 2 and 3 standard errors of the target.
"""

import argparse

from wheelweights import mc


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    parser.add_argument("--seeds", type=int, default=20)
    parser.add_argument("--samples", type=int, default=200_000)
    args = parser.parse_args()

    for m in args.m:
        z = []
        for seed in range(args.seeds):
            cfg = mc.MCConfig(samples=args.samples, seed=seed, chunk_size=args.samples // 20)
            est = mc.estimate_eq44(m, cfg)
            z.append((est.mean - est.target) / est.stderr)
        within2 = sum(abs(v) <= 2 for v in z) / len(z)
        within3 = sum(abs(v) <= 3 for v in z) / len(z)
        print(f"m={m}  target={mc.eq44_target(m):10.4f}  |z|<=2: {within2:.2f}  |z|<=3: {within3:.2f}")


if __name__ == "__main__":
    main()
