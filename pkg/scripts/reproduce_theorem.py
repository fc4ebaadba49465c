"""Tabulate the diagonal property of Z_n[x1..xm] for n <= N.

For each n the divisors-of-12 decider is compared against bounded
enumeration; enumeration is skipped (shown as "-") when its unit walk
would exceed the budget.

    python scripts/reproduce_theorem.py --max-n 30 --vars 1 2 --degree 2
"""
import argparse
import time

from diag12.diagonal import diagonal_poly_enumerate, diagonal_poly_theorem, diagonal_zn_table
from diag12.polyring import BudgetExceededError


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=30)
    parser.add_argument("--vars", type=int, nargs="+", default=[1, 2])
    parser.add_argument("--degree", type=int, default=2)
    args = parser.parse_args()

    header = ["n", "Z_n"] + [f"m={m} thm" for m in args.vars] + [f"m={m} enum" for m in args.vars]
    print(" | ".join(f"{h:>9}" for h in header))
    mismatches = 0
    start = time.perf_counter()
    for n in range(1, args.max_n + 1):
        row = [str(n), "yes" if diagonal_zn_table(n).verdict else "no"]
        theorem = {m: diagonal_poly_theorem(n, m).verdict for m in args.vars}
        row += ["yes" if theorem[m] else "no" for m in args.vars]
        for m in args.vars:
            try:
                verdict = diagonal_poly_enumerate(n, m, args.degree).verdict
            except BudgetExceededError:
                row.append("-")
                continue
            mismatches += verdict != theorem[m]
            row.append("yes" if verdict else "no")
        print(" | ".join(f"{c:>9}" for c in row))
    print(f"\ntheorem/enumeration mismatches: {mismatches}  ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
