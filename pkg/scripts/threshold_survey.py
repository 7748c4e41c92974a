#!/usr/bin/env python3
"""Where does l_q(G) = |E| - min |E_G(S)| start to fail as q drops?

For each graph, prints the smallest q from which the boundary-complement
value is exact for every larger q, next to the proven threshold (4n-2)/5 and
the guessed one (2n+1)/3. Uses the exact sequence solver, so n can exceed
the brute-force range.

    python scripts/threshold_survey.py --max-n 14
"""

import argparse
from fractions import Fraction

from antiramsey.extremal import boundary_complement_value, sequence_solve
from antiramsey.multipartite import enumerate_graphs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--min-n", type=int, default=4)
    args = ap.parse_args()

    above_guess_failures = 0
    for g in enumerate_graphs(args.max_n, min_n=args.min_n):
        exact_from = g.n - 1
        for q in range(g.n - 1, 1, -1):
            if sequence_solve(g, q).value != boundary_complement_value(g, q):
                break
            exact_from = q
        proven = Fraction(4 * g.n - 2, 5)
        guess = Fraction(2 * g.n + 1, 3)
        fails_above_guess = any(
            sequence_solve(g, q).value != boundary_complement_value(g, q)
            for q in range(g.n - 1, 1, -1)
            if 3 * q >= 2 * g.n + 1
        )
        above_guess_failures += fails_above_guess
        flag = "  <-- fails at some q >= (2n+1)/3" if fails_above_guess else ""
        print(f"{','.join(map(str, g.parts)):>24}  n={g.n:2d}  exact for q >= {exact_from:2d}"
              f"  (4n-2)/5={float(proven):5.1f}  (2n+1)/3={float(guess):5.1f}{flag}")
    print(f"graphs with a failure in the guessed range: {above_guess_failures}")


if __name__ == "__main__":
    main()
