import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials, rationals
from psicalc import (
    Polynomial,
    parse_psi_spec,
    psi_bernoulli_taylor,
    remainder_oracle,
    taylor_classical,
    verify_expansion,
)
from psicalc.expansions import ExpansionReport

X = Polynomial.x()
CLASSICAL = parse_psi_spec("classical")
FIB = parse_psi_spec("fib")

small_orders = st.integers(min_value=0, max_value=10)


class TestTaylorClassical:
    def test_cube_about_one(self):
        r = taylor_classical(X**3, 1, 2)
        assert r.partial_sum == 1 + 3 * (X - 1) + 3 * (X - 1) ** 2
        assert r.cauchy_remainder == (X - 1) ** 3
        assert r.exact

    def test_order_beyond_degree(self):
        f = X**4 - F(2, 3) * X
        r = taylor_classical(f, F(-1, 2), 7)
        assert r.cauchy_remainder == Polynomial.zero()
        assert r.partial_sum == f
        assert r.exact

    def test_order_zero(self):
        r = taylor_classical(X, 0, 0)
        assert r.partial_sum == Polynomial.zero()
        assert r.cauchy_remainder == X
        assert r.exact

    @given(polynomials(max_degree=8), rationals, small_orders)
    def test_always_exact(self, f, alpha, n):
        r = taylor_classical(f, alpha, n)
        assert r.partial_sum + r.cauchy_remainder == f
        assert r.exact


class TestPsiBernoulliTaylor:
    def test_classical_matches_taylor_pointwise(self):
        r = psi_bernoulli_taylor(CLASSICAL, X**3, 1, 2, 2)
        assert [t.coeff(0) for t in r.terms] == [1, 3, 3]
        assert r.cauchy_remainder.coeff(0) == 1
        assert r.exact

    def test_constant_function(self):
        c = F(9, 4)
        r = psi_bernoulli_taylor(FIB, Polynomial.constant(c), 3, -1, 4)
        assert r.terms[0].coeff(0) == c
        assert all(t == Polynomial.zero() for t in r.terms[1:])
        assert r.cauchy_remainder == Polynomial.zero()
        assert r.exact

    def test_fibonomial_pointwise_case(self):
        r = psi_bernoulli_taylor(FIB, X**2, 0, 1, 1)
        total = sum((t.coeff(0) for t in r.terms), F(0)) + r.cauchy_remainder.coeff(0)
        assert total == 1  # f(1)
        assert r.exact

    @given(
        polynomials(max_degree=7),
        rationals,
        rationals,
        st.integers(min_value=0, max_value=8),
    )
    def test_always_exact_fibonomial(self, f, alpha, x_eval, n):
        r = psi_bernoulli_taylor(FIB, f, alpha, x_eval, n)
        assert r.exact

    def test_classical_reduction_term_by_term(self):
        rng = random.Random(7)
        for _ in range(25):
            f = Polynomial([F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, 9))])
            alpha = F(rng.randint(-4, 4), rng.randint(1, 3))
            x_eval = F(rng.randint(-4, 4), rng.randint(1, 3))
            n = rng.randint(0, 8)
            tc = taylor_classical(f, alpha, n)
            pt = psi_bernoulli_taylor(CLASSICAL, f, alpha, x_eval, n)
            for poly_term, point_term in zip(tc.terms, pt.terms):
                assert poly_term(x_eval) == point_term.coeff(0)
            assert tc.cauchy_remainder(x_eval) == pt.cauchy_remainder.coeff(0)

    def test_pointwise_exactness_implies_polynomial_identity(self):
        # deg f + 1 sample points pin the partial-sum-plus-remainder
        # polynomial down to f itself
        f = X**5 - 3 * X**2 + F(1, 2)
        n = 3
        for ctx in (FIB, parse_psi_spec("q:2")):
            for x_eval in range(f.degree + 1):
                assert psi_bernoulli_taylor(ctx, f, F(1, 2), x_eval, n).exact

    def test_remainder_zero_beyond_degree(self):
        f = X**3 - X
        r = psi_bernoulli_taylor(FIB, f, 1, 4, 9)
        assert r.cauchy_remainder == Polynomial.zero()
        assert r.exact


class TestOracleAndVerifier:
    def test_oracle_subtracts(self):
        assert remainder_oracle(X**2, X**2) == Polynomial.zero()
        partial = 1 + 3 * (X - 1) + 3 * (X - 1) ** 2
        assert remainder_oracle(X**3, partial) == (X - 1) ** 3
        assert remainder_oracle(Polynomial.zero(), Polynomial.zero()) == Polynomial.zero()

    def test_verifier_passes_fresh_report(self):
        assert verify_expansion(taylor_classical(X**4, F(1, 3), 2)).passed

    def test_verifier_catches_tampering(self):
        r = taylor_classical(X**3, 1, 2)
        tampered = ExpansionReport(
            psi_label=r.psi_label,
            alpha=r.alpha,
            order=r.order,
            terms=r.terms,
            partial_sum=r.partial_sum,
            cauchy_remainder=r.cauchy_remainder + 1,
            oracle_remainder=r.oracle_remainder,
            exact=r.exact,
        )
        assert not verify_expansion(tampered).passed

    def test_degenerate_order_zero(self):
        assert verify_expansion(taylor_classical(Polynomial.zero(), 0, 0)).passed
