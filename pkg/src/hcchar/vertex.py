"""Vertex-operator actions: the creation operators on the power-sum ring,
Clifford straightening of operator words, and the lowering action on the
Q-basis together with its f-coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from .gamma import GammaElement, apply_partial, expand_q_n
from .partitions import Parts, compositions_of, multiplicities, odd_partitions_of
from .qpoly import ONE, QPoly, ZERO, round_bracket

# A Q-basis element is a finite combination of Q_nu.1 over strict nu, with
# the empty key standing for the vacuum.
QBasisElement = dict[Parts, QPoly]


# ---------------------------------------------------------------------------
# creation-operator action in the power-sum basis

def _annihilation_component(j: int, a: GammaElement) -> GammaElement:
    # degree-j component of exp(-sum over odd n of d/dp_n z^{-n})
    if j == 0:
        return a
    out = GammaElement.zero()
    for sigma in odd_partitions_of(j):
        denom = 1
        for m in multiplicities(sigma).values():
            denom *= factorial(m)
        partial = a
        for part in sigma:
            partial = apply_partial(part, partial)
            if partial.is_zero():
                break
        if not partial.is_zero():
            out = out + partial.scale(Fraction((-1) ** len(sigma), denom))
    return out


def apply_Q_m(m: int, a: GammaElement) -> GammaElement:
    """The z^m component of the vertex operator applied to a.

    Finite sum: the creation series contributes q_{m+j} while the
    annihilation series lowers the degree by j, so j runs up to deg(a).
    """
    out = GammaElement.zero()
    for j in range(max(0, -m), a.degree() + 1):
        lowered = _annihilation_component(j, a)
        if lowered.is_zero():
            continue
        out = out + expand_q_n(m + j) * lowered
    return out


@cache
def Q_lambda_vacuum(lam: Parts) -> GammaElement:
    """Q_{lam_1} ... Q_{lam_l} . 1 computed in the power-sum basis."""
    if not lam:
        return GammaElement.one()
    return apply_Q_m(lam[0], Q_lambda_vacuum(lam[1:]))


# ---------------------------------------------------------------------------
# Clifford straightening

def _prepend(m: int, nu: Parts) -> list[tuple[int, Parts]]:
    # Q_m acting on Q_nu.1 for strict nu, written in strict terms again.
    # Relations used: Q_a Q_b = -Q_b Q_a + (-1)^b 2 delta_{a,-b},
    # Q_0 . 1 = 1, Q_{-n} . 1 = 0 for n > 0, Q_a^2 = 0 for a != 0.
    if m == 0:
        return [((-1) ** len(nu), nu)]
    if not nu:
        return [(1, (m,))] if m > 0 else []
    head, rest = nu[0], nu[1:]
    if m > head:
        return [(1, (m,) + nu)]
    if m == head:
        return []
    out: list[tuple[int, Parts]] = []
    if m == -head:
        out.append(((-1) ** head * 2, rest))
    for c, tau in _prepend(m, rest):
        for c2, sig in _prepend(head, tau):
            out.append((-c * c2, sig))
    return out


def straighten(seq: tuple[int, ...]) -> dict[Parts, int]:
    """Rewrite the operator word Q_{a_1}...Q_{a_s}.1 as an integer combination
    of Q_nu.1 with nu strict.  Zero results are dropped."""
    acc: dict[Parts, int] = {(): 1}
    for m in reversed(seq):
        nxt: dict[Parts, int] = {}
        for nu, c in acc.items():
            for c2, sig in _prepend(m, nu):
                nxt[sig] = nxt.get(sig, 0) + c * c2
        acc = {k: v for k, v in nxt.items() if v}
        if not acc:
            return {}
    return acc


# ---------------------------------------------------------------------------
# f-coefficients

@cache
def f_single(i: int) -> QPoly:
    """f_i = 2(t-1)(i)_t for i > 0; f_0 = 1; zero for negative i."""
    if i < 0:
        return ZERO
    if i == 0:
        return ONE
    return round_bracket(i) * QPoly((-2, 2))


@cache
def f_coeff(tau: Parts) -> QPoly:
    """Product of f over the parts of a composition; zeros contribute 1."""
    out = ONE
    for part in tau:
        if part < 0:
            return ZERO
        if part:
            out = out * f_single(part)
    return out


@cache
def f_pair(m: int, n: int) -> QPoly:
    """Two-row value f_{(m,n)} = f_m f_n + 2 sum_{a=1}^{n} (-1)^a f_{m+a} f_{n-a}."""
    if m < 0 or n < 0:
        raise ValueError("f_pair needs nonnegative arguments")
    if n == 0:
        return f_single(m)
    out = f_single(m) * f_single(n)
    for a in range(1, n + 1):
        term = f_single(m + a) * f_single(n - a)
        out = out + term.scale(2 * (-1) ** a)
    return out


# ---------------------------------------------------------------------------
# lowering action on the Q-basis

def apply_g_star_Qbasis(k: int, element: QBasisElement) -> QBasisElement:
    """One lowering step: on each Q_lam.1, sum f_tau Q_{lam - tau}.1 over all
    compositions tau of k with l(lam) slots, straightening every term."""
    if k < 0:
        raise ValueError("negative degree")
    if k == 0:
        return dict(element)
    out: QBasisElement = {}
    for lam, coeff in element.items():
        if not lam:
            continue
        for tau in compositions_of(k, len(lam)):
            ftau = f_coeff(tau)
            diff = tuple(l - t for l, t in zip(lam, tau))
            for nu, c in straighten(diff).items():
                value = (coeff * ftau).scale(c)
                out[nu] = out.get(nu, ZERO) + value
    return {k2: v for k2, v in out.items() if not v.is_zero()}


def g_star_vacuum_coeff(lam: Parts, mu: Parts) -> QPoly:
    """Apply the lowering operators for every part of mu to Q_lam.1 and read
    off the vacuum coefficient."""
    state: QBasisElement = {lam: ONE}
    for part in mu:
        state = apply_g_star_Qbasis(part, state)
        if not state:
            return ZERO
    return state.get((), ZERO)
