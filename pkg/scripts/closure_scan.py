#!/usr/bin/env python3
"""Scan whether rule-representable SE-model sets are closed under union or intersection.

Runs the pairwise closure experiment over every unordered pair of
representable sets for small alphabets and prints a summary per size,
with the first few counterexamples when closure fails.
"""
from __future__ import annotations

import argparse
import string
import time

from sekit import Alphabet, closure_experiment, print_rule


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=2, help="largest alphabet size (default 2)")
    ap.add_argument("--show", type=int, default=3, help="counterexamples to print per failure")
    args = ap.parse_args()

    for op in ("union", "intersection"):
        print(f"== {op} ==")
        for n in range(1, args.max_size + 1):
            alphabet = Alphabet(tuple(string.ascii_lowercase[:n]))
            start = time.perf_counter()
            report = closure_experiment(alphabet, op, rule_cap=n)
            elapsed = time.perf_counter() - start
            verdict = "closed" if report.closed else f"NOT closed ({len(report.counterexamples)} counterexamples)"
            print(
                f"  n={n}: {report.set_count} sets, {report.pair_count} pairs, "
                f"{verdict} [{elapsed:.2f}s]"
            )
            for ce in report.counterexamples[: args.show]:
                print(f'      {print_rule(ce.left)!r} with {print_rule(ce.right)!r}')
        print()


if __name__ == "__main__":
    main()
