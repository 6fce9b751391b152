from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials, rationals
from psicalc import (
    Polynomial,
    eval_functional_difference,
    poly_affine_compose,
    poly_eval,
)

X = Polynomial.x()


class TestEval:
    def test_square_minus_one_at_three(self):
        assert poly_eval(X**2 - 1, 3) == 8

    def test_zero_polynomial(self):
        assert poly_eval(Polynomial.zero(), F(7, 2)) == 0

    def test_rational_coefficients(self):
        f = F(2, 3) * X**3 + X
        assert poly_eval(f, F(3, 2)) == F(15, 4)


class TestAffineCompose:
    def test_identity_map(self):
        assert poly_affine_compose(X**2, 1, 0) == X**2

    def test_shift(self):
        assert poly_affine_compose(X**2, 1, -3) == X**2 - 6 * X + 9

    def test_degree_one(self):
        assert poly_affine_compose(X, 2, 3) == 2 * X + 3

    @given(polynomials(), rationals.filter(lambda q: q != 0), rationals)
    def test_affine_inverse(self, f, q, h):
        assert poly_affine_compose(poly_affine_compose(f, q, h), 1 / q, -h / q) == f


class TestEvalDifference:
    def test_cube(self):
        assert eval_functional_difference(X**3, 0, 1) == 1

    def test_constant(self):
        assert eval_functional_difference(Polynomial.constant(F(5, 3)), -2, 7) == 0

    def test_quadratic(self):
        assert eval_functional_difference(X**2 - X, 1, 3) == 6


class TestRingAxioms:
    @given(polynomials(), polynomials(), polynomials())
    def test_associativity_and_distributivity(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(polynomials(), polynomials())
    def test_commutativity(self, f, g):
        assert f + g == g + f
        assert f * g == g * f

    @given(polynomials(), polynomials())
    def test_degree_of_product(self, f, g):
        if f and g:
            assert (f * g).degree == f.degree + g.degree

    @given(polynomials(), polynomials(), rationals)
    def test_eval_is_multiplicative(self, f, g, a):
        assert poly_eval(f * g, a) == poly_eval(f, a) * poly_eval(g, a)


class TestStructure:
    def test_zero_degree_sentinel(self):
        assert Polynomial.zero().degree == -1
        assert Polynomial([0, 0, 0]).degree == -1

    def test_canonical_form_strips_trailing_zeros(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (F(1), F(2))

    def test_exact_division(self):
        f = X**3 - 1
        q, r = divmod(f, X - 1)
        assert r == Polynomial.zero()
        assert q == X**2 + X + 1

    @given(polynomials(), polynomials(max_degree=4))
    def test_divmod_reconstructs(self, f, g):
        if g:
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree

    def test_derivative_and_antiderivative(self):
        f = X**4 - F(3, 2) * X
        assert f.antiderivative().derivative() == f
