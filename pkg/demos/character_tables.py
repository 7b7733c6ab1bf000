#!/usr/bin/env python3
"""Build the character tables for weights 3 through 7 and print them.

Rows are the odd class types mu, columns the strict labels lam, both in
reverse-lexicographic order.  Every freshly computed cell is compared
against the embedded reference tables.
"""

import time

from hcchar.characters import char_table
from hcchar.golden import golden_table
from hcchar.partitions import format_parts, odd_partitions_of, strict_partitions_of


def print_table(n: int, table) -> None:
    lams = strict_partitions_of(n)
    header = ["mu\\lam"] + [format_parts(lam) for lam in lams]
    rows = [header]
    for mu in odd_partitions_of(n):
        rows.append(
            [format_parts(mu)] + [table[(lam, mu)].to_text() for lam in lams]
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))


def main() -> None:
    for n in range(3, 8):
        start = time.perf_counter()
        table = char_table(n)
        elapsed = time.perf_counter() - start
        matches = table == golden_table(n)
        print(f"=== weight n = {n}  ({len(table)} cells, {elapsed * 1000:.1f} ms, "
              f"reference match: {matches}) ===")
        print_table(n, table)
        print()


if __name__ == "__main__":
    main()
