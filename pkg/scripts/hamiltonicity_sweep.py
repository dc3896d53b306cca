#!/usr/bin/env python3
"""Stress the traceability guarantee: sample invertible matrices over prime
fields and demand a Hamiltonian path in the two-row graph (and a cycle in
the cyclic variant for n >= 3).  Any violation aborts with the offending
matrix attached, since one would disprove the library's core invariant.

Example:
    python3 scripts/hamiltonicity_sweep.py --sizes 2 3 4 5 6 7 8 \
        --orders 2 3 5 --trials 500 --seed 0
"""

import argparse
import sys

from tworow import AssertionFailure, ExperimentConfig, ExperimentMode, run_experiment


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4, 5, 6, 7, 8])
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    total = 0
    for n in args.sizes:
        for q in args.orders:
            cfg = ExperimentConfig(
                n=n,
                q=q,
                trials=args.trials,
                seed=args.seed,
                mode=ExperimentMode.HAMILTONICITY_SWEEP,
            )
            try:
                rep = run_experiment(cfg)
            except AssertionFailure as exc:
                print(f"VIOLATION at n={n} q={q}: {exc}", file=sys.stderr)
                if exc.matrix is not None:
                    print(exc.matrix, file=sys.stderr)
                return 1
            total += rep.total
            print(f"n={n} q={q}: {rep.successes}/{rep.total} traceable")
    print(f"all {total} samples traceable")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
