#!/usr/bin/env python3
"""Tabulate how often the two-row graph of a random invertible matrix is
complete, over a grid of sizes and prime field orders.

Example:
    python3 scripts/completeness_table.py --sizes 2 3 4 5 --orders 2 3 5 \
        --trials 500 --seed 0
"""

import argparse

from tworow import ExperimentConfig, ExperimentMode, run_experiment


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    header = "n\\q " + " ".join(f"{q:>10}" for q in args.orders)
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        cells = []
        for q in args.orders:
            rep = run_experiment(
                ExperimentConfig(
                    n=n,
                    q=q,
                    trials=args.trials,
                    seed=args.seed,
                    mode=ExperimentMode.COMPLETENESS,
                )
            )
            cells.append(f"{rep.estimate_decimal():>10}")
        print(f"{n:<4}" + " ".join(cells))


if __name__ == "__main__":
    main()
