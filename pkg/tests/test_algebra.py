import math
from fractions import Fraction as Fr

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from puresextic.algebra import (CubicMatrix, CubicNum, RadicandMismatch, SexticNum,
                                char_poly_rational, gram_pair, hermitian_gram,
                                mat_det, trace_numeric)

rat = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def C(m, *q):
    return CubicNum.of(m, *q)


def test_cubic_mul_examples():
    # c * c = c^2, c^2 * c = m, and (1+c)(1-c) = 1 - c^2
    assert C(2, 0, 1, 0) * C(2, 0, 1, 0) == C(2, 0, 0, 1)
    assert C(2, 0, 0, 1) * C(2, 0, 1, 0) == C(2, 2, 0, 0)
    assert C(5, 1, 1, 0) * C(5, 1, -1, 0) == C(5, 1, 0, -1)


def test_cubic_radicand_mismatch():
    with pytest.raises(RadicandMismatch):
        C(2, 1, 0, 0) * C(3, 1, 0, 0)


def test_cubic_inverse_and_division():
    x = C(7, 3, Fr(1, 2), -2)
    assert x * x.inverse() == C(7, 1, 0, 0)
    y = C(7, 0, 1, 0)
    assert (x / y) * y == x


def test_cubic_sign_norm_vs_numeric():
    for m in (2, 5, -3, -10, 44):
        for coeffs in [(1, 1, 0), (-3, 1, 1), (0, -2, 1), (10, -5, Fr(1, 3))]:
            x = C(m, *coeffs)
            assert x.sign() == (1 if x.evaluate(60) > 0 else -1)


@given(st.integers(min_value=2, max_value=60), rat, rat, rat, rat, rat, rat)
@settings(max_examples=60, deadline=None)
def test_cubic_ring_axioms(m, a0, a1, a2, b0, b1, b2):
    x = C(m, a0, a1, a2)
    y = C(m, b0, b1, b2)
    assert x * y == y * x
    assert (x + y) * (x - y) == x * x - y * y


def test_sextic_mul_examples():
    th = SexticNum.theta_power
    assert th(12, 1) * th(12, 5) == SexticNum.of(12, (12, 0, 0, 0, 0, 0))
    assert th(-7, 3) * th(-7, 3) == SexticNum.of(-7, (-7, 0, 0, 0, 0, 0))
    x = SexticNum.of(2, (1, 1, 0, 0, 0, 0))
    assert x * x == SexticNum.of(2, (1, 2, 1, 0, 0, 0))


def test_sextic_trace():
    x = SexticNum.of(10, (Fr(3, 2), 1, 2, 3, 4, 5))
    assert x.trace() == 9
    # numerical trace over all six embeddings agrees to 1e-9 relative
    t = trace_numeric(x, 60)
    assert abs(complex(t.real, t.imag) - 9) < 1e-9
    y = SexticNum.of(-10, (Fr(-7, 3), 1, 0, 2, 0, 1))
    tn = trace_numeric(y, 60)
    assert abs(complex(tn.real, tn.imag) - float(-14)) < 1e-9 * 14


def test_gram_pair_basics():
    one = SexticNum.one(44)
    assert gram_pair(one, one) == CubicNum.of(44, 6)
    th = SexticNum.theta_power(44, 1)
    assert gram_pair(th, th) == CubicNum.of(44, 0, 6, 0)
    # symmetry
    x = SexticNum.of(44, (1, 2, 0, Fr(1, 2), 0, 1))
    y = SexticNum.of(44, (0, 1, 1, 0, Fr(2, 3), 0))
    assert gram_pair(x, y) == gram_pair(y, x)


def test_gram_pair_matches_embeddings_numerically():
    """<J(x), J(y)> = sum_k sigma_k(x) conj(sigma_k(y)) for both signs of m."""
    for m in (7, -7, 12, -44):
        x = SexticNum.of(m, (1, 2, -1, 0, 1, Fr(1, 3)))
        y = SexticNum.of(m, (0, 1, 1, -2, 0, 1))
        exact = gram_pair(x, y).evaluate(60)
        with mpmath.workdps(60):
            r = mpmath.mpf(abs(m)) ** (mpmath.mpf(1) / 6)
            total = mpmath.mpc(0)

            def val(z, th):
                return sum(mpmath.mpf(c.numerator) / c.denominator * th ** t
                           for t, c in enumerate(z.coeffs))

            for k in range(6):
                w = mpmath.e ** (2j * mpmath.pi * k / 6) if m > 0 else \
                    mpmath.e ** (1j * mpmath.pi * (2 * k + 1) / 6)
                th = r * w
                total += val(x, th) * mpmath.conj(val(y, th))
            assert abs(total.imag) < 1e-40
            assert abs(total.real - exact) < 1e-40 * (1 + abs(exact))


def test_gram_positive_definite_both_signs():
    for m in (5, -5, 17, -17):
        basis = [SexticNum.theta_power(m, t) for t in range(6)]
        g = hermitian_gram(basis)
        assert g.is_positive_definite()


@given(st.integers(min_value=2, max_value=30),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4), min_size=6, max_size=6),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4), min_size=6, max_size=6))
@settings(max_examples=40, deadline=None)
def test_gram_bilinear_symmetric(m, xs, ys):
    x = SexticNum.of(m, xs)
    y = SexticNum.of(m, ys)
    assert gram_pair(x, y) == gram_pair(y, x)
    if not x.is_zero():
        assert gram_pair(x, x).sign() == 1


def test_det_examples():
    ident = CubicMatrix.identity(2, 6)
    assert ident.det() == CubicNum.of(2, 1)
    # diag(1, c, c^2, m, mc, mc^2) has det m^5
    m = 2
    diag = [C(m, 1, 0, 0), C(m, 0, 1, 0), C(m, 0, 0, 1),
            C(m, m, 0, 0), C(m, 0, m, 0), C(m, 0, 0, m)]
    d = CubicMatrix.diagonal(m, diag)
    assert d.det() == CubicNum.of(m, m ** 5)


def test_det_congruence_rule():
    """det(B^T G B) = det(B)^2 det(G), exactly."""
    m = 5
    g = hermitian_gram([SexticNum.theta_power(m, t) for t in range(6)])
    rows = [[1, 0, 0, Fr(1, 2), 0, 0], [0, 1, 0, 0, Fr(1, 2), 0], [0, 0, 1, 0, 0, Fr(1, 2)],
            [0, 0, 0, Fr(1, 2), 0, 0], [0, 0, 0, 0, Fr(1, 2), 0], [0, 0, 0, 0, 0, Fr(1, 2)]]
    b = CubicMatrix.from_rational(m, rows)
    lhs = g.congruence(b).det()
    detb = mat_det([r[:] for r in rows])
    assert lhs == g.det() * (detb * detb)


def test_gram_congruence_invariance():
    """Gram(B P) = P^T Gram(B) P for a rational change of tuple."""
    m = 7
    basis = [SexticNum.theta_power(m, t) for t in range(6)]
    p_rows = [[1, 1, 0, 0, 0, 0], [0, 1, 0, 0, 0, Fr(1, 3)], [0, 0, 1, 0, 0, 0],
              [0, 0, 0, 1, 0, 0], [0, 0, 2, 0, 1, 0], [0, 0, 0, 0, 0, 1]]
    new_basis = []
    for t in range(6):
        acc = SexticNum.of(m, (0,) * 6)
        for s in range(6):
            acc = acc + basis[s] * p_rows[s][t]
        new_basis.append(acc)
    p = CubicMatrix.from_rational(m, p_rows)
    assert hermitian_gram(new_basis) == hermitian_gram(basis).congruence(p)


def test_char_poly_companion():
    # companion matrix of x^3 - 2 has char poly x^3 - 2
    a = [[Fr(0), Fr(0), Fr(2)], [Fr(1), Fr(0), Fr(0)], [Fr(0), Fr(1), Fr(0)]]
    assert char_poly_rational(a) == [Fr(-2), Fr(0), Fr(0), Fr(1)]


def test_theta_is_integral():
    assert SexticNum.theta_power(12, 1).char_poly() == \
        [Fr(-12), Fr(0), Fr(0), Fr(0), Fr(0), Fr(0), Fr(1)]
