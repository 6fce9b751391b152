from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials, rationals
from psicalc import (
    AdmissibilityError,
    ConvergenceError,
    DegenerateParamsError,
    DomainError,
    HahnParams,
    Polynomial,
    forward_difference,
    hahn_derivative,
    jackson_antiderivative,
    jackson_integral_exact,
    jackson_integral_numeric,
    parse_psi_spec,
    psi_definite_integral,
    psi_derivative,
    q_derivative,
    verify_hahn_reduction,
    verify_jackson_inverse,
    LatticeFunction,
)

X = Polynomial.x()


class TestQDerivative:
    def test_classical_limit(self):
        assert q_derivative(X**3, 1) == 3 * X**2

    def test_q_two(self):
        assert q_derivative(X**3, 2) == 7 * X**2

    def test_q_half(self):
        assert q_derivative(X**2, F(1, 2)) == F(3, 2) * X

    def test_difference_quotient_form(self):
        q = F(3, 2)
        for f in (X**4 - X, 2 * X**3 + F(1, 2) * X**2):
            numerator = f - f.compose_affine(q, 0)
            denominator = Polynomial([0, 1 - q])
            quot, rem = divmod(numerator, denominator)
            assert rem == Polynomial.zero()
            assert q_derivative(f, q) == quot

    def test_root_of_unity_inadmissible(self):
        with pytest.raises(AdmissibilityError):
            q_derivative(X**2, -1)

    @given(polynomials(max_degree=8))
    def test_matches_psi_derivative(self, f):
        ctx = parse_psi_spec("q:2")
        assert q_derivative(f, 2) == psi_derivative(ctx, f)


class TestHahnDerivative:
    def test_linear(self):
        assert hahn_derivative(X, HahnParams(2, 3)) == Polynomial.constant(1)

    def test_square(self):
        assert hahn_derivative(X**2, HahnParams(2, 3)) == 3 * X + 3

    def test_q_one_h_one_is_forward_difference(self):
        for f in (X**3, X**2 - F(1, 2) * X, Polynomial.constant(3)):
            lhs = hahn_derivative(f, HahnParams(1, 1))
            rhs = forward_difference(LatticeFunction.from_polynomial(f)).polynomial
            assert lhs == rhs

    def test_h_zero_is_q_derivative(self):
        for f in (X**4, X**2 + X):
            assert hahn_derivative(f, HahnParams(F(1, 2), 0)) == q_derivative(f, F(1, 2))

    def test_degenerate_params(self):
        with pytest.raises(DegenerateParamsError):
            hahn_derivative(X, HahnParams(1, 0))


class TestHahnReduction:
    def test_hand_case(self):
        assert verify_hahn_reduction(HahnParams(2, 3), 2).passed

    def test_h_zero(self):
        assert verify_hahn_reduction(HahnParams(F(3, 2), 0), 16).passed

    def test_grid(self):
        for q in (F(2), F(1, 2), F(3, 2), F(-2)):
            for h in (F(0), F(1), F(-3), F(7, 5)):
                assert verify_hahn_reduction(HahnParams(q, h), 32).passed

    def test_q_one_rejected(self):
        with pytest.raises(DomainError):
            verify_hahn_reduction(HahnParams(1, 1), 4)


class TestJacksonExact:
    def test_classical(self):
        assert jackson_integral_exact(X**2, 1, 1) == F(1, 3)

    def test_q_two(self):
        assert jackson_integral_exact(X, 2, 1) == F(1, 3)

    def test_zero(self):
        assert jackson_integral_exact(Polynomial.zero(), F(5, 4), F(7, 2)) == 0

    @given(polynomials(max_degree=6), rationals)
    def test_matches_psi_integral(self, f, z):
        ctx = parse_psi_spec("q:2")
        assert jackson_integral_exact(f, 2, z) == psi_definite_integral(ctx, f, 0, z)


class TestJacksonNumeric:
    def test_identity_integrand(self):
        q = F(9, 10)
        result = jackson_integral_numeric(lambda t: t, q, 1, 1e-13)
        assert abs(result.value - float(jackson_integral_exact(X, q, 1))) < 1e-12

    def test_q_near_one_approaches_classical(self):
        result = jackson_integral_numeric(lambda t: t * t, F(999, 1000), 1, 1e-13)
        assert abs(result.value - 1 / 3) < 1e-3
        assert abs(result.value - float(jackson_integral_exact(X**2, F(999, 1000), 1))) < 1e-12

    def test_constant_geometric_series(self):
        result = jackson_integral_numeric(lambda t: 1.0, F(1, 2), 1, 1e-14)
        assert abs(result.value - 1.0) < 1e-12

    def test_domain_check(self):
        with pytest.raises(DomainError):
            jackson_integral_numeric(lambda t: t, F(3, 2), 1, 1e-12)

    def test_cap_reached(self):
        with pytest.raises(ConvergenceError):
            jackson_integral_numeric(lambda t: 1.0, F(99, 100), 1, 1e-13, max_terms=10)

    def test_polynomial_grid_against_exact(self):
        for q in (F(1, 2), F(9, 10), F(99, 100)):
            for z in (F(1), F(2), F(-2), F(1, 3)):
                for f in (X, X**2, X**4 - X, Polynomial.constant(1)):
                    coeffs = [float(c) for c in f.coeffs]

                    def fn(t, coeffs=coeffs):
                        acc = 0.0
                        for c in reversed(coeffs):
                            acc = acc * t + c
                        return acc

                    numeric = jackson_integral_numeric(fn, q, z, 1e-13)
                    exact = float(jackson_integral_exact(f, q, z))
                    assert abs(numeric.value - exact) < 1e-12
                    assert numeric.terms_used <= 10_000


class TestJacksonInverse:
    def test_q_two_cube(self):
        assert jackson_antiderivative(X**3, 2) == X**4 / 15
        assert verify_jackson_inverse(X**3, 2).passed

    def test_classical(self):
        assert verify_jackson_inverse(X**4 - F(1, 2) * X, 1).passed

    def test_zero(self):
        assert verify_jackson_inverse(Polynomial.zero(), F(5, 3)).passed
