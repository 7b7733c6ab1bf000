"""Published character tables for weights 3 through 7, embedded as data.

Keys are (lam, mu) pairs; values are coefficient tuples ascending by the
exponent of q.  The verify suite compares freshly computed tables against
these cell by cell, so no network or regeneration step is involved.
"""

from __future__ import annotations

from .partitions import Parts
from .qpoly import QPoly

Cell = tuple[int, ...]

GOLDEN_TABLES: dict[int, dict[tuple[Parts, Parts], Cell]] = {
    3: {
        ((3,), (3,)): (2, -2, 2),
        ((2, 1), (3,)): (0, -2),
        ((3,), (1, 1, 1)): (8,),
        ((2, 1), (1, 1, 1)): (4,),
    },
    4: {
        ((4,), (3, 1)): (4, -4, 4),
        ((3, 1), (3, 1)): (2, -6, 2),
        ((4,), (1, 1, 1, 1)): (16,),
        ((3, 1), (1, 1, 1, 1)): (16,),
    },
    5: {
        ((5,), (5,)): (2, -2, 2, -2, 2),
        ((4, 1), (5,)): (0, -2, 2, -2),
        ((3, 2), (5,)): (0, 0, 2),
        ((5,), (3, 1, 1)): (8, -8, 8),
        ((4, 1), (3, 1, 1)): (8, -16, 8),
        ((3, 2), (3, 1, 1)): (4, -12, 4),
        ((5,), (1, 1, 1, 1, 1)): (32,),
        ((4, 1), (1, 1, 1, 1, 1)): (48,),
        ((3, 2), (1, 1, 1, 1, 1)): (32,),
    },
    6: {
        ((6,), (5, 1)): (4, -4, 4, -4, 4),
        ((5, 1), (5, 1)): (2, -6, 6, -6, 2),
        ((4, 2), (5, 1)): (0, -4, 8, -4),
        ((3, 2, 1), (5, 1)): (0, 0, 4),
        ((6,), (3, 3)): (4, -8, 12, -8, 4),
        ((5, 1), (3, 3)): (4, -16, 20, -16, 4),
        ((4, 2), (3, 3)): (4, -16, 28, -16, 4),
        ((3, 2, 1), (3, 3)): (0, -8, 8, -8),
        ((6,), (3, 1, 1, 1)): (16, -16, 16),
        ((5, 1), (3, 1, 1, 1)): (24, -40, 24),
        ((4, 2), (3, 1, 1, 1)): (24, -56, 24),
        ((3, 2, 1), (3, 1, 1, 1)): (8, -24, 8),
        ((6,), (1, 1, 1, 1, 1, 1)): (64,),
        ((5, 1), (1, 1, 1, 1, 1, 1)): (128,),
        ((4, 2), (1, 1, 1, 1, 1, 1)): (160,),
        ((3, 2, 1), (1, 1, 1, 1, 1, 1)): (64,),
    },
    7: {
        ((7,), (7,)): (2, -2, 2, -2, 2, -2, 2),
        ((6, 1), (7,)): (0, -2, 2, -2, 2, -2),
        ((5, 2), (7,)): (0, 0, 2, -2, 2),
        ((4, 3), (7,)): (0, 0, 0, -2),
        ((4, 2, 1), (7,)): (),
        ((7,), (5, 1, 1)): (8, -8, 8, -8, 8),
        ((6, 1), (5, 1, 1)): (8, -16, 16, -16, 8),
        ((5, 2), (5, 1, 1)): (4, -20, 28, -20, 4),
        ((4, 3), (5, 1, 1)): (0, -8, 16, -8),
        ((4, 2, 1), (5, 1, 1)): (0, -8, 24, -8),
        ((7,), (3, 3, 1)): (8, -16, 24, -16, 8),
        ((6, 1), (3, 3, 1)): (12, -40, 52, -40, 12),
        ((5, 2), (3, 3, 1)): (16, -64, 96, -64, 16),
        ((4, 3), (3, 3, 1)): (8, -32, 56, -32, 8),
        ((4, 2, 1), (3, 3, 1)): (8, -48, 72, -48, 8),
        ((7,), (3, 1, 1, 1, 1)): (32, -32, 32),
        ((6, 1), (3, 1, 1, 1, 1)): (64, -96, 64),
        ((5, 2), (3, 1, 1, 1, 1)): (96, -192, 96),
        ((4, 3), (3, 1, 1, 1, 1)): (48, -112, 48),
        ((4, 2, 1), (3, 1, 1, 1, 1)): (64, -160, 64),
        ((7,), (1, 1, 1, 1, 1, 1, 1)): (128,),
        ((6, 1), (1, 1, 1, 1, 1, 1, 1)): (320,),
        ((5, 2), (1, 1, 1, 1, 1, 1, 1)): (576,),
        ((4, 3), (1, 1, 1, 1, 1, 1, 1)): (320,),
        ((4, 2, 1), (1, 1, 1, 1, 1, 1, 1)): (448,),
    },
}


def golden_table(n: int) -> dict[tuple[Parts, Parts], QPoly]:
    """The published table for weight n as polynomial values."""
    return {key: QPoly(coeffs) for key, coeffs in GOLDEN_TABLES[n].items()}
