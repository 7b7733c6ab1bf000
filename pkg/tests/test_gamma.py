import random
from fractions import Fraction

from hcchar.gamma import (
    GammaElement,
    apply_g_star_pbasis,
    expand_g_n,
    expand_q_n,
    g_product,
    inner_product,
    principal_specialize,
)
from hcchar.partitions import odd_partitions_of, strict_partitions_of
from hcchar.qpoly import ONE, QPoly, ZERO, round_bracket
from hcchar.vertex import Q_lambda_vacuum


def p_elem(*rho):
    return GammaElement({tuple(rho): ONE})


def test_product_is_partition_union():
    assert (p_elem(3) * p_elem(1)).terms == {(3, 1): ONE}
    one = GammaElement.one()
    a = p_elem(5, 1).scale(QPoly((1, 2)))
    assert a * one == a
    doubled = p_elem(1).scale(2)
    assert (doubled * doubled).terms == {(1, 1): QPoly((4,))}


def test_inner_product_values():
    assert inner_product(p_elem(1), p_elem(1)) == QPoly((Fraction(1, 2),))
    assert inner_product(p_elem(3), p_elem(1, 1, 1)) == ZERO
    assert inner_product(p_elem(3, 3, 1), p_elem(3, 3, 1)) == QPoly((Fraction(9, 4),))


def test_inner_product_symmetric_and_degree_split():
    a = p_elem(3).scale(QPoly((0, 1))) + p_elem(1)
    b = p_elem(3).scale(3) + p_elem(1, 1, 1)
    assert inner_product(a, b) == inner_product(b, a)
    # different homogeneous degrees never pair
    assert inner_product(p_elem(3), p_elem(3, 1, 1)) == ZERO


def test_expand_q_n():
    assert expand_q_n(1).terms == {(1,): QPoly((2,))}
    assert expand_q_n(0) == GammaElement.one()
    q3 = expand_q_n(3)
    assert q3.terms == {
        (3,): QPoly((Fraction(2, 3),)),
        (1, 1, 1): QPoly((Fraction(4, 3),)),
    }


def test_expand_g_n():
    assert expand_g_n(1).terms == {(1,): QPoly((-2, 2))}
    assert expand_g_n(0) == GammaElement.one()


def test_one_variable_values():
    # the one-variable evaluation of the deformed generator (all p_r -> 1)
    # equals 2(t-1)(n)_t, matching the two-variable value of q_n
    for n in range(1, 11):
        total = ZERO
        for _, c in expand_g_n(n).terms.items():
            total = total + c
        assert total == QPoly((-2, 2)) * round_bracket(n), n
        assert principal_specialize(expand_q_n(n)) == QPoly((-2, 2)) * round_bracket(n)


def test_principal_specialize_examples():
    assert principal_specialize(p_elem(1)) == QPoly((-1, 1))
    assert principal_specialize(p_elem(3, 1)) == QPoly((-1, 0, 0, 1)) * QPoly((-1, 1))


def _series_exponential_degree(n: int) -> GammaElement:
    # degree-n coefficient of exp(sum over odd r of 2(t^r - 1)/r p_r z^r),
    # built by multiplying out the truncated exponential series
    grades: list[GammaElement] = [GammaElement.one()] + [
        GammaElement.zero() for _ in range(n)
    ]
    x: list[GammaElement] = [GammaElement.zero() for _ in range(n + 1)]
    for r in range(1, n + 1, 2):
        coeff = QPoly((-1,) + (0,) * (r - 1) + (1,)).scale(Fraction(2, r))
        x[r] = GammaElement({(r,): coeff})
    term = grades[:]
    for j in range(1, n + 1):
        nxt = [GammaElement.zero() for _ in range(n + 1)]
        for d1 in range(n + 1):
            if term[d1].is_zero():
                continue
            for d2 in range(1, n + 1 - d1, 2):
                if not x[d2].is_zero():
                    nxt[d1 + d2] = nxt[d1 + d2] + term[d1] * x[d2]
        term = [e.scale(Fraction(1, j)) for e in nxt]
        for d in range(n + 1):
            grades[d] = grades[d] + term[d]
        if all(e.is_zero() for e in term):
            break
    return grades[n]


def test_expand_g_n_matches_series():
    for n in range(9):
        assert expand_g_n(n) == _series_exponential_degree(n), n


def test_g_star_basics():
    one = GammaElement.one()
    assert apply_g_star_pbasis(1, one).is_zero()
    assert apply_g_star_pbasis(3, one).is_zero()
    r = apply_g_star_pbasis(1, p_elem(1))
    assert inner_product(r, one) == QPoly((-1, 1))
    assert inner_product(p_elem(1), expand_g_n(1)) == QPoly((-1, 1))


def _random_element(rng, degree):
    terms = {}
    for rho in odd_partitions_of(degree):
        if rng.random() < 0.7:
            terms[rho] = QPoly([rng.randint(-3, 3) for _ in range(3)])
    return GammaElement(terms)


def test_g_star_adjoint_random():
    rng = random.Random(2024)
    for degree in range(1, 7):
        for k in range(1, degree + 1):
            a = _random_element(rng, degree)
            b = _random_element(rng, degree - k)
            lhs = inner_product(apply_g_star_pbasis(k, a), b)
            rhs = inner_product(a, expand_g_n(k) * b)
            assert lhs == rhs, (degree, k)


def test_q_basis_orthogonality():
    for n in range(9):
        sps = strict_partitions_of(n)
        for a in sps:
            for b in sps:
                expect = QPoly((2 ** len(a),)) if a == b else ZERO
                assert inner_product(Q_lambda_vacuum(a), Q_lambda_vacuum(b)) == expect


def test_g_product_commutes():
    assert g_product((5, 3, 1)) == g_product((1, 3, 5))
