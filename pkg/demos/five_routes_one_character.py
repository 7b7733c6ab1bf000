#!/usr/bin/env python3
"""Compute single character values by five independent algorithms.

The point of the library's design: a brute-force inner product, a lowering
recursion with Clifford straightening, a Pfaffian expansion, a strip-weight
recursion, and a Pieri-rule recursion all produce the same exact polynomial.
Closed forms cover the special class types.
"""

from hcchar.characters import (
    METHODS,
    char_column,
    char_hook_mu,
    char_one_row,
    char_two_row,
)

CELLS = [
    ((4, 2), (3, 3)),
    ((4, 2, 1), (3, 3, 1)),
    ((6, 2, 1), (5, 3, 1)),
    ((5, 2), (3, 1, 1, 1, 1)),
]


def main() -> None:
    for lam, mu in CELLS:
        print(f"lam = {lam}, mu = {mu}")
        values = set()
        for name, fn in METHODS.items():
            value = fn(lam, mu)
            values.add(value)
            print(f"  {name:<13} {value.to_text()}")
        agreed = values.pop()
        assert not values, "methods disagree!"
        print(f"  palindromic coefficients: {agreed.is_palindromic()}")
        print()

    print("closed forms on their class types:")
    print("  one row   (7)/(3,3,1):   ", char_one_row((3, 3, 1)).to_text())
    print("  two rows  (4,2)/(3,3):   ", char_two_row(4, (3, 3)).to_text())
    print("  column    (3,2,1)/(1^6): ", char_column((3, 2, 1)).to_text())
    print("  hook      (5,1)/(3,1^3): ", char_hook_mu((5, 1), 3).to_text())


if __name__ == "__main__":
    main()
