"""q-derivative, Hahn (q,h)-derivative, and the Jackson q-integral.

Everything is exact on polynomials; the only floating-point code in the
package is the numeric Jackson quadrature, which sums the geometric
sampling series for a black-box integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (
    AdmissibilityError,
    ConvergenceError,
    DegenerateParamsError,
    DomainError,
    InternalError,
)
from .operators import VerificationReport, _report
from .poly import Polynomial, Scalar

JACKSON_TERM_CAP = 100_000


@dataclass(frozen=True)
class HahnParams:
    q: Fraction
    h: Fraction

    def __init__(self, q: Scalar, h: Scalar):
        object.__setattr__(self, "q", Fraction(q))
        object.__setattr__(self, "h", Fraction(h))


def q_factor(n: int, q: Scalar) -> Fraction:
    """The q-integer 1 + q + ... + q^(n-1); n itself at q = 1."""
    q = Fraction(q)
    if q == 1:
        return Fraction(n)
    value = (1 - q**n) / (1 - q)
    if value == 0:
        raise AdmissibilityError(f"{n}_q = 0 at q = {q}")
    return value


def q_derivative(f: Polynomial, q: Scalar) -> Polynomial:
    """x^n -> n_q x^(n-1); the difference quotient (f(x)-f(qx))/((1-q)x)."""
    return Polynomial(
        [c * q_factor(n, q) for n, c in enumerate(f.coeffs[1:], 1)]
    )


def hahn_derivative(f: Polynomial, p: HahnParams) -> Polynomial:
    """(f(x) - f(qx+h)) / ((1-q)x - h), by exact polynomial division."""
    if p.q == 1 and p.h == 0:
        raise DegenerateParamsError("(q, h) = (1, 0) makes the quotient 0/0")
    numerator = f - f.compose_affine(p.q, p.h)
    denominator = Polynomial([-p.h, 1 - p.q])
    quotient, rem = divmod(numerator, denominator)
    if rem:
        raise InternalError(
            f"Hahn quotient left remainder {rem}; divisibility is a theorem"
        )
    return quotient


def verify_hahn_reduction(p: HahnParams, N: int) -> VerificationReport:
    """The Hahn derivative is the q-derivative conjugated by the shift
    x -> x + h/(1-q), checked on monomials up to degree N."""
    if p.q == 1:
        raise DomainError("the reduction's conjugating shift needs q != 1")
    s = p.h / (1 - p.q)
    failures = []
    for n in range(N + 1):
        xn = Polynomial.monomial(n)
        lhs = hahn_derivative(xn, p)
        rhs = q_derivative(xn.compose_affine(1, s), p.q).compose_affine(1, -s)
        if lhs != rhs:
            failures.append((f"n={n}", lhs, rhs))
            break
    return _report("hahn-reduction", f"q={p.q}, h={p.h}, N={N}", N + 1, failures)


def jackson_antiderivative(f: Polynomial, q: Scalar) -> Polynomial:
    """x^n -> x^(n+1)/(n+1)_q, as a polynomial in the upper limit."""
    return Polynomial(
        [0] + [c / q_factor(n + 1, q) for n, c in enumerate(f.coeffs)]
    )


def jackson_integral_exact(f: Polynomial, q: Scalar, z: Scalar) -> Fraction:
    """The Jackson q-integral of a polynomial from 0 to z, in closed form."""
    return jackson_antiderivative(f, q)(z)


@dataclass(frozen=True)
class JacksonQuadrature:
    value: float
    terms_used: int
    tail_tol: float
    q: float
    z: float


def jackson_integral_numeric(
    fn: Callable[[float], float],
    q: Scalar,
    z: Scalar,
    tail_tol: float,
    max_terms: int = JACKSON_TERM_CAP,
) -> JacksonQuadrature:
    """Sum (1-q) z fn(q^k z) q^k until the current term drops below
    tail_tol * (1-q), which bounds the geometric tail by about tail_tol.

    q and z are accepted exactly and converted to float once, recorded in
    the result.  Raises ConvergenceError if the cap is hit first.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise DomainError(f"numeric Jackson integral needs 0 < q < 1, got {q}")
    qf = float(q)
    zf = float(Fraction(z))
    prefactor = (1.0 - qf) * zf
    cutoff = tail_tol * (1.0 - qf)
    terms = []
    qk = 1.0
    small_streak = 0
    for k in range(max_terms):
        term = prefactor * fn(qk * zf) * qk
        terms.append(term)
        # a single tiny term may just be a zero of the integrand; demand a
        # short run of them before trusting the geometric tail bound
        small_streak = small_streak + 1 if abs(term) < cutoff else 0
        if small_streak >= 3:
            return JacksonQuadrature(
                value=math.fsum(terms),
                terms_used=k + 1,
                tail_tol=tail_tol,
                q=qf,
                z=zf,
            )
        qk *= qf
    raise ConvergenceError(
        f"Jackson series did not meet the tail criterion within {max_terms} terms"
    )


def verify_jackson_inverse(f: Polynomial, q: Scalar) -> VerificationReport:
    """The q-derivative of the Jackson antiderivative returns f."""
    lhs = q_derivative(jackson_antiderivative(f, q), q)
    failures = [] if lhs == f else [(f"f={f}", lhs, f)]
    return _report("jackson-inverse", f"q={Fraction(q)}", 1, failures)
