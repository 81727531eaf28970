"""Term counts of the Q_n F-polynomials next to the box-count formula.

    python3 scripts/qn_table.py 6
"""
from __future__ import annotations

import sys

from dtposets.families import qn_vertices
from dtposets.webs import macmahon, term_counts


def main(n: int) -> None:
    counts = term_counts(n)
    print(f"{'vertex':>10}  {'terms':>6}  {'boxes':>6}")
    for a, b, c in qn_vertices(n):
        print(f"{f'({a},{b},{c})':>10}  {counts[(a, b, c)]:>6}  {macmahon(c + 1, a + 1, b + 1):>6}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
