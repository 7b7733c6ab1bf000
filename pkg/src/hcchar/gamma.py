"""The ring generated by odd power sums, in the power-sum basis.

Elements are finite combinations of p_rho over odd partitions rho with
polynomial coefficients.  Everything here is brute force by design: this
layer is the independent oracle against which the faster algorithms are
checked.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import (
    Parts,
    merge_partitions,
    multiplicities,
    odd_partitions_of,
    z_lambda,
    zt_denominator,
)
from .qpoly import ONE, QPoly, ZERO


class GammaElement:
    """Finite map from odd partitions to polynomial coefficients.

    Treated as immutable: operations return fresh elements and never touch
    an existing terms dict.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Parts, QPoly] | None = None) -> None:
        self.terms: dict[Parts, QPoly] = {
            k: v for k, v in (terms or {}).items() if not v.is_zero()
        }

    @staticmethod
    def one() -> "GammaElement":
        return GammaElement({(): ONE})

    @staticmethod
    def zero() -> "GammaElement":
        return GammaElement()

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest weight among the keys; -1 for the zero element."""
        return max((sum(k) for k in self.terms), default=-1)

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GammaElement) and self.terms == other.terms

    def __add__(self, other: "GammaElement") -> "GammaElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return GammaElement(out)

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return self + other.scale(QPoly((-1,)))

    def scale(self, c) -> "GammaElement":
        if isinstance(c, QPoly):
            if c.is_zero():
                return GammaElement()
            return GammaElement({k: v * c for k, v in self.terms.items()})
        return GammaElement({k: v.scale(c) for k, v in self.terms.items()})

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        out: dict[Parts, QPoly] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = merge_partitions(ka, kb)
                prod = va * vb
                out[key] = out.get(key, ZERO) + prod
        return GammaElement(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "GammaElement(0)"
        bits = [f"({v.to_text('t')})*p{list(k)}" for k, v in self.items()]
        return "GammaElement(" + " + ".join(bits) + ")"


def inner_product(a: GammaElement, b: GammaElement) -> QPoly:
    """<p_rho, p_sigma> = 2^{-l(rho)} z_rho delta_{rho,sigma}, extended bilinearly."""
    out = ZERO
    small, large = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    for key, va in small.terms.items():
        vb = large.terms.get(key)
        if vb is not None:
            out = out + (va * vb).scale(Fraction(z_lambda(key), 2 ** len(key)))
    return out


@cache
def expand_q_n(n: int) -> GammaElement:
    """One-row Q-function: sum over odd rho of n of 2^{l(rho)}/z_rho p_rho."""
    if n < 0:
        return GammaElement.zero()
    if n == 0:
        return GammaElement.one()
    return GammaElement(
        {
            rho: QPoly((Fraction(2 ** len(rho), z_lambda(rho)),))
            for rho in odd_partitions_of(n)
        }
    )


@cache
def expand_g_n(n: int) -> GammaElement:
    """Deformed one-row generator: sum over odd rho of n of
    (-2)^{l(rho)}/z_rho(t) p_rho, with 1/z(t) kept polynomial-over-integer."""
    if n < 0:
        return GammaElement.zero()
    if n == 0:
        return GammaElement.one()
    terms = {}
    for rho in odd_partitions_of(n):
        coeff = zt_denominator(rho).scale(Fraction((-2) ** len(rho), z_lambda(rho)))
        terms[rho] = coeff
    return GammaElement(terms)


@cache
def g_product(mu: Parts) -> GammaElement:
    """Product of the deformed generators over the parts of mu."""
    out = GammaElement.one()
    for part in mu:
        out = out * expand_g_n(part)
    return out


def apply_partial(n: int, a: GammaElement) -> GammaElement:
    """The derivation d/dp_n: multiplies by the multiplicity of n and removes
    one part n from the key."""
    out: dict[Parts, QPoly] = {}
    for rho, coeff in a.terms.items():
        m = rho.count(n)
        if not m:
            continue
        idx = rho.index(n)
        key = rho[:idx] + rho[idx + 1:]
        value = coeff.scale(m)
        out[key] = out.get(key, ZERO) + value
    return GammaElement(out)


def apply_g_star_pbasis(k: int, a: GammaElement) -> GammaElement:
    """Degree-k component of exp(sum over odd n of (t^n - 1) d/dp_n z^{-n})."""
    if k == 0:
        return a
    if k < 0:
        raise ValueError("negative degree")
    out = GammaElement.zero()
    for sigma in odd_partitions_of(k):
        denom = 1
        for m in multiplicities(sigma).values():
            denom *= factorial(m)
        coeff = ONE
        for part in sigma:
            coeff = coeff * QPoly((-1,) + (0,) * (part - 1) + (1,))
        partial = a
        for part in sigma:
            partial = apply_partial(part, partial)
            if partial.is_zero():
                break
        if not partial.is_zero():
            out = out + partial.scale(coeff.scale(Fraction(1, denom)))
    return out


def principal_specialize(a: GammaElement) -> QPoly:
    """Substitute p_r -> t^r - 1 for every odd r."""
    out = ZERO
    for rho, coeff in a.terms.items():
        factor = ONE
        for part in rho:
            factor = factor * QPoly((-1,) + (0,) * (part - 1) + (1,))
        out = out + coeff * factor
    return out
