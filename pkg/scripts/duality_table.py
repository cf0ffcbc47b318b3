#!/usr/bin/env python3
"""Print the symmetric table of generalized poly-Bernoulli sums.

The entries 𝓑_m^(-l)(n) form a symmetric matrix in (l, m) for every fixed
n — the n = 0 slice is the classical duality B_m^(-l) = B_l^(-m).  This
script prints a slice so the symmetry is visible by eye, together with
the row of powers 2^m it contains.
"""

import argparse

from polybern.polybernoulli import poly_bernoulli_B, script_B_closed


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=7, help="table size (indices 0..size-1)")
    parser.add_argument("--n", type=int, default=0, help="fixed argument n of the slice")
    args = parser.parse_args()

    size, n = args.size, args.n
    table = [[script_B_closed(m, l, n) for l in range(size)] for m in range(size)]
    width = max(len(str(v)) for row in table for v in row)

    print(f"slice n = {n}:  rows m, columns l")
    header = " ".join(f"{l:>{width}d}" for l in range(size))
    print(f"{'':>4s} {header}")
    for m, row in enumerate(table):
        print(f"{m:>4d} " + " ".join(f"{v:>{width}d}" for v in row))

    asymmetric = [
        (m, l)
        for m in range(size)
        for l in range(size)
        if table[m][l] != table[l][m]
    ]
    print(f"\nsymmetric: {not asymmetric}")
    if n == 0:
        powers = [poly_bernoulli_B(m, -1) for m in range(size)]
        print(f"second row is 2^m: {powers == [2 ** m for m in range(size)]}")


if __name__ == "__main__":
    main()
