"""Irreducible character values of the Hecke-Clifford algebra.

Five independent routes compute the same exact polynomial for a pair
(lam, mu): a brute-force inner product in the power-sum ring, a lowering
recursion on the Q-basis, a Pfaffian expansion, a strip-weight recursion,
and a Pieri-rule recursion on the indexing partition.  Closed forms cover
one-row, two-row, one-column and hook class types.

All internal recursions work with the unnormalized pairing G(lam, mu);
the final value ties the normalization 2^{-eps(lam)} (q-1)^{-l(mu)} once
at the boundary and asserts integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .gamma import g_product, inner_product
from .partitions import (
    Parts,
    SkewKind,
    bounded_compositions,
    classify_skew,
    coarsenings,
    delta,
    ensure_partition,
    ensure_strict_partition,
    epsilon,
    is_odd_partition,
    nonzero_length,
    odd_partitions_of,
    pieri_strips,
    shifted_syt_count,
    sort_desc,
    strict_partitions_of,
    strict_subpartitions,
    weight,
)
from .pfaffian import skew_Q_principal
from .qpoly import (
    NonDivisibleError,
    ONE,
    QPoly,
    ZERO,
    exact_div_qminus1_pow,
    round_bracket,
)
from .vertex import Q_lambda_vacuum, f_coeff, g_star_vacuum_coeff


class NotGdsError(ValueError):
    """The skew shape carries no strip weight."""


class BadShapeError(ValueError):
    """The shape is outside the domain of a closed form."""


# ---------------------------------------------------------------------------
# strip weights

def sbs_principal(rows: Parts) -> QPoly:
    """Two-variable value of a shifted border strip with the given per-row
    cell counts (top row first): the signed sum of f over coarsenings."""
    if any(r < 1 for r in rows):
        raise ValueError("row counts must be positive")
    out = ZERO
    for tau in coarsenings(rows):
        term = f_coeff(tau)
        if (len(rows) - len(tau)) % 2:
            term = -term
        out = out + term
    return out


def wt_gds(lam: Parts, nu: Parts) -> QPoly:
    """Strip weight of the skew lam*/nu*: (-t)^c times 2 when the length
    drops by exactly two, times the border-strip value of every component of
    the one-cell-diagonal part."""
    cls = classify_skew(lam, nu)
    if cls.kind is SkewKind.NOT_GDS:
        raise NotGdsError(f"{lam}/{nu} is not a generalized double strip")
    out = QPoly((0,) * cls.c + ((-1) ** cls.c,))
    if cls.l_jump == 2:
        out = out.scale(2)
    for rows in cls.beta_components:
        out = out * sbs_principal(rows)
    return out


@cache
def gds_expansion(lam: Parts, k: int) -> tuple[tuple[Parts, QPoly], ...]:
    """All strict nu below lam whose skew is a k-cell generalized double
    strip, with their weights."""
    out = []
    for nu in strict_subpartitions(lam, weight(lam) - k):
        cls = classify_skew(lam, nu)
        if cls.kind is not SkewKind.NOT_GDS:
            out.append((nu, wt_gds(lam, nu)))
    return tuple(out)


@cache
def pfaffian_expansion(lam: Parts, k: int) -> tuple[tuple[Parts, QPoly], ...]:
    """Lowering step resolved through skew Pfaffians: nonzero coefficients of
    Q_nu.1 in the image of Q_lam.1."""
    out = []
    for nu in strict_subpartitions(lam, weight(lam) - k):
        value = skew_Q_principal(lam, nu)
        if not value.is_zero():
            out.append((nu, value))
    return tuple(out)


# ---------------------------------------------------------------------------
# normalization boundary

def _finalize(g_value: QPoly, lam: Parts, mu: Parts) -> QPoly:
    quotient = exact_div_qminus1_pow(g_value, nonzero_length(mu))
    result = quotient.scale(Fraction(1, 2 ** epsilon(lam)))
    if not result.has_integer_coeffs():
        raise NonDivisibleError(
            f"character for {lam}, {mu} is not integral: {result.to_text()}"
        )
    return result


def _validate(lam: Parts, mu: Parts) -> tuple[Parts, Parts]:
    lam = ensure_strict_partition(tuple(lam), "lam") if lam else ()
    mu = sort_desc(mu)
    if mu:
        ensure_partition(mu, "mu")
    if weight(lam) != weight(mu):
        raise ValueError(f"weights differ: |{lam}| != |{mu}|")
    return lam, mu


# ---------------------------------------------------------------------------
# the five routes

def char_oracle(lam: Parts, mu: Parts) -> QPoly:
    """Brute force: pair the product of deformed generators with Q_lam.1 in
    the power-sum basis."""
    lam, mu = _validate(lam, mu)
    g_value = inner_product(g_product(mu), Q_lambda_vacuum(lam))
    return _finalize(g_value, lam, mu)


def char_recursive(lam: Parts, mu: Parts, order: str = "desc") -> QPoly:
    """Lowering recursion on the Q-basis, one part of mu at a time."""
    lam, mu = _validate(lam, mu)
    if order == "asc":
        parts = tuple(reversed(mu))
    elif order == "desc":
        parts = mu
    else:
        raise ValueError(f"unknown order {order!r}")
    return _finalize(g_star_vacuum_coeff(lam, parts), lam, mu)


@cache
def _g_pfaffian(lam: Parts, mu: Parts) -> QPoly:
    if not lam:
        return ONE
    out = ZERO
    for nu, value in pfaffian_expansion(lam, mu[0]):
        out = out + value * _g_pfaffian(nu, mu[1:])
    return out


def char_pfaffian(lam: Parts, mu: Parts) -> QPoly:
    """Peel parts of mu through the Pfaffian form of the lowering step."""
    lam, mu = _validate(lam, mu)
    return _finalize(_g_pfaffian(lam, mu), lam, mu)


@cache
def _g_combinatorial(lam: Parts, mu: Parts) -> QPoly:
    if not lam:
        return ONE
    out = ZERO
    for nu, value in gds_expansion(lam, mu[0]):
        out = out + value * _g_combinatorial(nu, mu[1:])
    return out


def char_combinatorial(lam: Parts, mu: Parts) -> QPoly:
    """Murnaghan-Nakayama-style recursion over generalized double strips."""
    lam, mu = _validate(lam, mu)
    if not is_odd_partition(mu) and mu:
        raise ValueError(f"combinatorial rule needs odd mu, got {mu}")
    return _finalize(_g_combinatorial(lam, mu), lam, mu)


@cache
def _g_pieri(lam: Parts, mu: Parts) -> QPoly:
    if not lam:
        return ONE
    n = weight(lam)
    body = lam[1:]
    out = ZERO
    for i in range(lam[0], n + 1):
        strips = pieri_strips(body, i - lam[0], mode="sub")
        if not strips:
            continue
        sign = (-1) ** (i - lam[0])
        for tau in bounded_compositions(i, mu):
            ftau = f_coeff(tau)
            rest = sort_desc(m - t for m, t in zip(mu, tau))
            inner = ZERO
            for xi, a in strips:
                inner = inner + _g_pieri(xi, rest).scale(2**a)
            out = out + (ftau * inner).scale(sign)
    return out


def char_pieri(lam: Parts, mu: Parts) -> QPoly:
    """Recursion on the indexing partition through the Pieri rule."""
    lam, mu = _validate(lam, mu)
    if not is_odd_partition(mu) and mu:
        raise ValueError(f"pieri rule needs odd mu, got {mu}")
    return _finalize(_g_pieri(lam, mu), lam, mu)


# ---------------------------------------------------------------------------
# closed forms

def char_one_row(mu: Parts) -> QPoly:
    """lam = (n): 2^{l(mu)} (mu)_q."""
    mu = sort_desc(mu)
    if mu and not is_odd_partition(mu):
        raise ValueError(f"one-row closed form needs odd mu, got {mu}")
    out = QPoly((2 ** nonzero_length(mu),))
    for part in mu:
        out = out * round_bracket(part)
    return out


def char_two_row(k: int, mu: Parts) -> QPoly:
    """lam = (k, n-k) with n-k < k < n, via the generating function whose
    v-coefficients collect the split products of f over both arguments."""
    mu = sort_desc(mu)
    if mu and not is_odd_partition(mu):
        raise ValueError(f"two-row closed form needs odd mu, got {mu}")
    n = weight(mu)
    if not (0 < n - k < k):
        raise BadShapeError(f"(k, n-k) = ({k},{n - k}) is not a two-row strict shape")
    # C(v) as a list of q-polynomials indexed by the power of v
    series: list[QPoly] = [ONE]
    for part in mu:
        factor: list[QPoly] = [ZERO] * (part + 1)
        factor[0] = round_bracket(part)
        factor[part] = factor[part] + round_bracket(part)
        for j in range(1, part):
            factor[j] = (
                factor[j]
                + (round_bracket(j) * round_bracket(part - j)).scale(2)
                * QPoly((-1, 1))
            )
        new = [ZERO] * (len(series) + part)
        for i, a in enumerate(series):
            if a.is_zero():
                continue
            for j, b in enumerate(factor):
                if not b.is_zero():
                    new[i + j] = new[i + j] + a * b
        series = new
    lead = (QPoly((-2, 2))) ** nonzero_length(mu)
    series = [lead * c for c in series]
    tail_k = ZERO
    tail_k1 = ZERO
    for i, c in enumerate(series):
        signed = c.scale((-1) ** i)
        if i >= k:
            tail_k = tail_k + signed
        if i >= k + 1:
            tail_k1 = tail_k1 + signed
    g_value = (tail_k + tail_k1).scale((-1) ** k)
    return _finalize(g_value, (k, n - k), mu)


def char_column(lam: Parts) -> QPoly:
    """mu = (1^n): 2^{n - eps(lam)} times the shifted tableau count."""
    lam = ensure_strict_partition(tuple(lam), "lam") if lam else ()
    n = weight(lam)
    return QPoly((2 ** (n - epsilon(lam)) * shifted_syt_count(lam),))


def char_hook_mu(lam: Parts, k: int) -> QPoly:
    """mu = (k, 1^{n-k}) with k odd: strip weights against tableau counts."""
    lam = ensure_strict_partition(tuple(lam), "lam") if lam else ()
    n = weight(lam)
    if k % 2 == 0 or k < 1 or k > n:
        raise BadShapeError(f"hook class needs odd k <= {n}, got {k}")
    total = ZERO
    for nu, value in gds_expansion(lam, k):
        total = total + value.scale(shifted_syt_count(nu))
    quotient = exact_div_qminus1_pow(total, 1)
    result = quotient.scale(Fraction(2 ** (n - k), 2 ** epsilon(lam)))
    if not result.has_integer_coeffs():
        raise NonDivisibleError(f"hook character for {lam} not integral")
    return result


# ---------------------------------------------------------------------------
# tables

METHODS = {
    "oracle": char_oracle,
    "recursive": char_recursive,
    "pfaffian": char_pfaffian,
    "combinatorial": char_combinatorial,
    "pieri": char_pieri,
}


def char_value(lam: Parts, mu: Parts, method: str = "auto") -> QPoly:
    """Compute one character value with the chosen method (auto picks the
    strip-weight recursion for odd mu, the Q-basis recursion otherwise)."""
    if method == "auto":
        mu_sorted = sort_desc(mu)
        if is_odd_partition(mu_sorted) or not mu_sorted:
            return char_combinatorial(lam, mu)
        return char_recursive(lam, mu)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    return METHODS[method](lam, mu)


def char_table(n: int, method: str = "auto") -> dict[tuple[Parts, Parts], QPoly]:
    """All character values for weight n: columns index strict partitions,
    rows odd partitions, both in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = {}
    for mu in odd_partitions_of(n):
        for lam in strict_partitions_of(n):
            table[(lam, mu)] = char_value(lam, mu, method=method)
    return table


def orthogonality_sum(mu: Parts, nu: Parts, method: str = "auto") -> QPoly:
    """Sum over strict lam of 2^{-delta(lam)} times the product of character
    values at mu and nu; the character-side form of the spin bitrace."""
    mu, nu = sort_desc(mu), sort_desc(nu)
    if weight(mu) != weight(nu):
        raise ValueError("weights differ")
    n = weight(mu)
    out = ZERO
    for lam in strict_partitions_of(n):
        term = char_value(lam, mu, method=method) * char_value(lam, nu, method=method)
        out = out + term.scale(Fraction(1, 2 ** delta(lam)))
    if not out.has_integer_coeffs():
        raise NonDivisibleError("orthogonality sum not integral")
    return out
