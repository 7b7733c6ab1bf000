"""Exact univariate polynomials over the rationals.

One dense representation serves every polynomial in the character calculus.
The indeterminate is rendered as ``q``; internal formulas often call it ``t``,
but both name the same variable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class NonDivisibleError(ArithmeticError):
    """An exact division left a nonzero remainder; signals an upstream bug."""


class QPoly:
    """Dense polynomial with Fraction coefficients and no trailing zeros.

    ``coeffs[i]`` is the coefficient of q^i; the zero polynomial is the
    empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c: Scalar) -> "QPoly":
        return QPoly((c,))

    @staticmethod
    def monomial(c: Scalar, exp: int) -> "QPoly":
        if exp < 0:
            raise ValueError("negative exponent")
        return QPoly((0,) * exp + (c,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Exponent of the lowest nonzero term; -1 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, QPoly):
            if not self.coeffs or not other.coeffs:
                return ZERO
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return QPoly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "QPoly":
        if not c:
            return ZERO
        return QPoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_at(self, x: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        """True iff the coefficients from valuation to degree read the same
        both ways; the zero polynomial counts as palindromic."""
        window = self.coeffs[self.valuation:] if self.coeffs else ()
        return window == window[::-1]

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({self.to_text()!r})"

    def to_text(self, var: str = "q") -> str:
        """Canonical rendering: descending exponents, explicit '*' and '^'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                head = var if exp == 1 else f"{var}^{exp}"
                body = head if mag == 1 else f"{mag}*{head}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_json(self, var: str = "q") -> dict:
        """JSON form: coefficients as [num, den] pairs ascending by exponent."""
        return {
            "var": var,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "QPoly":
        coeffs = [Fraction(num, den) for num, den in data["coeffs"]]
        return QPoly(coeffs)


ZERO = QPoly()
ONE = QPoly((1,))
VAR = QPoly((0, 1))


def exact_div_qminus1_pow(f: QPoly, m: int) -> QPoly:
    """Divide f by (q-1)^m, requiring the division to be exact."""
    if m < 0:
        raise ValueError("negative power")
    for _ in range(m):
        if f.is_zero():
            continue
        # synthetic division by (q - 1): remainder is f(1)
        out = [Fraction(0)] * len(f.coeffs)
        carry = Fraction(0)
        for i in range(len(f.coeffs) - 1, 0, -1):
            carry += f.coeffs[i]
            out[i - 1] = carry
        if carry + f.coeffs[0]:
            raise NonDivisibleError(f"remainder {carry + f.coeffs[0]} dividing by (q-1)")
        f = QPoly(out)
    return f


@cache
def round_bracket(k: int) -> QPoly:
    """(k)_t = t^{k-1} - t^{k-2} + ... + (-1)^{k-1}; (0)_t = 1, 0 for k < 0."""
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    return QPoly(tuple((-1) ** (k - 1 - i) for i in range(k)))


@cache
def square_bracket(k: int) -> QPoly:
    """[k]_t = t^{k-1} + ... + t + 1 for k >= 1."""
    if k < 1:
        raise ValueError("square bracket needs k >= 1")
    return QPoly((1,) * k)
