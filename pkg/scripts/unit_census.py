"""Count units and involutions among polynomials of bounded degree.

    python scripts/unit_census.py --moduli 4 8 12 24 --vars 1 --degree 3
"""
import argparse
from collections import Counter

from diag12.diagonal import enumerate_units
from diag12.units import invert_unit, is_involution


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--moduli", type=int, nargs="+", default=[4, 8, 12, 24])
    parser.add_argument("--vars", type=int, default=1)
    parser.add_argument("--degree", type=int, default=2)
    args = parser.parse_args()

    print(f"{'n':>4} {'units':>8} {'involutions':>12}  nilpotency indices used")
    for n in args.moduli:
        units = involutions = 0
        indices = Counter()
        for u in enumerate_units(n, args.vars, args.degree):
            units += 1
            involutions += is_involution(u)
            indices[invert_unit(u).nilpotency_index_used] += 1
        print(f"{n:>4} {units:>8} {involutions:>12}  {dict(sorted(indices.items()))}")


if __name__ == "__main__":
    main()
