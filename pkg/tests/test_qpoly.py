from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hcchar.qpoly import (
    NonDivisibleError,
    ONE,
    QPoly,
    ZERO,
    exact_div_qminus1_pow,
    round_bracket,
    square_bracket,
)

coeff = st.integers(-9, 9) | st.fractions(max_denominator=6)
polys = st.lists(coeff, max_size=6).map(QPoly)


def subs_neg(f: QPoly) -> QPoly:
    """Substitute t -> -t."""
    return QPoly([c * (-1) ** i for i, c in enumerate(f.coeffs)])


def test_arith_examples():
    qm1 = QPoly((-1, 1))
    assert (qm1 * qm1).coeffs == (1, -2, 1)
    f = QPoly((3, 0, -2))
    assert f + ZERO == f
    prod = qm1.scale(2) * QPoly((1, -1, 1))
    assert prod == QPoly((-2, 4, -4, 2))


def test_canonical_form():
    assert QPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPoly((0, 0)).is_zero()
    assert QPoly(()).degree == -1
    assert QPoly((0, 0, 5)).valuation == 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ONE == a
    assert a + (-a) == ZERO


@given(polys, st.integers(0, 5))
def test_exact_div_roundtrip(f, m):
    product = f * QPoly((-1, 1)) ** m
    assert exact_div_qminus1_pow(product, m) == f


def test_exact_div_examples():
    assert exact_div_qminus1_pow(QPoly((1, -2, 1)).scale(2), 1) == QPoly((-2, 2))
    assert exact_div_qminus1_pow(QPoly((1, -2, 1)), 2) == ONE
    with pytest.raises(NonDivisibleError):
        exact_div_qminus1_pow(QPoly((-1, 0, 1)), 2)


def test_eval_examples():
    assert QPoly((1, -1, 1)).eval_at(1) == 1
    assert (QPoly((-1, 1)) ** 2).scale(2).eval_at(1) == 0
    assert QPoly((4, -16, 28, -16, 4)).eval_at(1) == 4
    assert QPoly((1, 2)).eval_at(Fraction(1, 2)) == 2


def test_palindromic():
    assert QPoly((1, -3, 1)).is_palindromic()
    assert QPoly((0, -2)).is_palindromic()
    assert not QPoly((0, -3, 1)).is_palindromic()
    assert ZERO.is_palindromic()


def test_round_bracket():
    assert round_bracket(3) == QPoly((1, -1, 1))
    assert round_bracket(0) == ONE
    assert round_bracket(-2) == ZERO


def test_square_bracket():
    assert square_bracket(1) == ONE
    assert square_bracket(3) == QPoly((1, 1, 1))
    with pytest.raises(ValueError):
        square_bracket(0)


def test_bracket_identities():
    # (k) + 2 sum_{i<k} (i) = [k], and (k) relates to [k] at -t, for k <= 50
    for k in range(1, 51):
        total = round_bracket(k)
        for i in range(1, k):
            total = total + round_bracket(i).scale(2)
        assert total == square_bracket(k)
        assert round_bracket(k) == subs_neg(square_bracket(k)).scale((-1) ** (k - 1))


def test_text_rendering():
    assert QPoly((4, -16, 28, -16, 4)).to_text() == "4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4"
    assert QPoly((0, -2)).to_text() == "-2*q"
    assert QPoly((8,)).to_text() == "8"
    assert ZERO.to_text() == "0"
    assert QPoly((1, -1, 1)).to_text() == "q^2 - q + 1"
    assert QPoly((Fraction(3, 2),)).to_text() == "3/2"


@given(polys)
def test_json_roundtrip(f):
    assert QPoly.from_json(f.to_json()) == f
