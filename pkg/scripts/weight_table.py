"""Print exact wheel weights next to the modified Bernoulli numbers.

    python scripts/weight_table.py --max-n 16
"""

import argparse

from wheelweights import genfun, recursion


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    s_hat = genfun.bernoulli_modified(args.max_n + 1)
    table = recursion.weight_table(args.max_n)
    print(f"{'n':>3}  {'w_n':>28}  {'s_hat_n':>28}  {'float(w_n)':>12}  agree")
    for n in range(2, args.max_n + 1):
        w = table.value(n)
        print(f"{n:>3}  {str(w):>28}  {str(s_hat[n]):>28}  {float(w):>12.4e}  {table.agrees(n)}")


if __name__ == "__main__":
    main()
