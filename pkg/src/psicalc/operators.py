"""The psi-calculus operator algebra.

Linear operators on polynomials: the psi-derivative, the deformed
multiplication operator x_hat, the psi-antiderivative, the star product
f(x_hat)g, psi-powers and truncated psi-exponentials, the umbral
coefficient map, and exact verifiers for the identities they satisfy
(commutator, telescoping, Bernoulli, Leibniz, exponential addition,
integration by parts, the fundamental theorem, and the two classical
series for the divided-difference and evaluation functionals).

Everything here is exact; verifiers return reports instead of raising on
a failed identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .poly import Polynomial, Scalar
from .sequences import PsiContext

PolyOp = Callable[[Polynomial], Polynomial]


# -- basic operators ------------------------------------------------------

def psi_derivative(ctx: PsiContext, f: Polynomial) -> Polynomial:
    """x^n -> n_psi x^(n-1), extended linearly; constants map to 0."""
    return Polynomial(
        [c * ctx.factor(n) for n, c in enumerate(f.coeffs[1:], 1)]
    )


def x_hat_psi(ctx: PsiContext, f: Polynomial) -> Polynomial:
    """x^n -> ((n+1)/(n+1)_psi) x^(n+1); images have zero constant term."""
    return Polynomial(
        [0] + [c * (n + 1) / ctx.factor(n + 1) for n, c in enumerate(f.coeffs)]
    )


def psi_antiderivative(ctx: PsiContext, f: Polynomial) -> Polynomial:
    """x^n -> x^(n+1)/(n+1)_psi; the right inverse of the psi-derivative."""
    return Polynomial(
        [0] + [c / ctx.factor(n + 1) for n, c in enumerate(f.coeffs)]
    )


def psi_definite_integral(ctx: PsiContext, f: Polynomial, a: Scalar, b: Scalar) -> Fraction:
    anti = psi_antiderivative(ctx, f)
    return anti(b) - anti(a)


def star_psi(ctx: PsiContext, f: Polynomial, g: Polynomial) -> Polynomial:
    """The noncommutative product f(x_hat) g.

    Operator powers of x_hat are built by repeated application, so
    degree-raising never truncates.
    """
    acc = Polynomial()
    image = g
    for k, c in enumerate(f.coeffs):
        if k > 0:
            image = x_hat_psi(ctx, image)
        if c:
            acc = acc + c * image
    return acc


def psi_power(ctx: PsiContext, n: int) -> Polynomial:
    """The n-th star power of x: (n!/n_psi!) x^n."""
    if n < 0:
        raise ValueError("psi_power index must be nonnegative")
    return Polynomial.monomial(n, Fraction(math.factorial(n)) / ctx.factorial(n))


def umbral_tilde(ctx: PsiContext, g: Polynomial) -> Polynomial:
    """The umbral map g -> g(x_hat) 1: scales the x^n coefficient by n!/n_psi!."""
    return Polynomial(
        [c * math.factorial(n) / ctx.factorial(n) for n, c in enumerate(g.coeffs)]
    )


def psi_exp(ctx: PsiContext, alpha: Scalar, N: int) -> Polynomial:
    """Degree-N truncation of the psi-exponential: sum a^n x^n / n_psi!."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    alpha = Fraction(alpha)
    return Polynomial([alpha**n / ctx.factorial(n) for n in range(N + 1)])


def exp_poly(alpha: Scalar, N: int) -> Polynomial:
    """Degree-N truncation of the ordinary exponential series."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    alpha = Fraction(alpha)
    return Polynomial([alpha**n / math.factorial(n) for n in range(N + 1)])


def divided_difference_zero(f: Polynomial) -> Polynomial:
    """x^n -> x^(n-1) for n >= 1, constants -> 0; equals (f(x) - f(0))/x."""
    return Polynomial(f.coeffs[1:])


# -- GHW pairs -------------------------------------------------------------

@dataclass(frozen=True)
class GhwPair:
    """A degree-lowering/degree-raising operator pair with [lower, raiser] = 1."""

    name: str
    lower: PolyOp
    raiser: PolyOp


def derivative_pair(y: Scalar = 0) -> GhwPair:
    """The classical pair: d/dx with multiplication by (x - y)."""
    y = Fraction(y)
    x = Polynomial.x()
    return GhwPair(
        name=f"D, x-({y})",
        lower=lambda f: f.derivative(),
        raiser=lambda f: (x - y) * f,
    )


def _shifted_int_coeffs(f: Polynomial, h: int) -> list | None:
    """Coefficients of f(x + h) as plain ints, or None if f has any
    non-integer coefficient.  Uses the addition-only synthetic-division
    shift, which is far cheaper than a general affine composition."""
    if any(c.denominator != 1 for c in f.coeffs):
        return None
    cs = [c.numerator for c in f.coeffs]
    d = len(cs)
    if h == 1:
        for k in range(d - 1):
            for j in range(d - 2, k - 1, -1):
                cs[j] += cs[j + 1]
    elif h == -1:
        for k in range(d - 1):
            for j in range(d - 2, k - 1, -1):
                cs[j] -= cs[j + 1]
    else:
        for k in range(d - 1):
            for j in range(d - 2, k - 1, -1):
                cs[j] += h * cs[j + 1]
    return cs


def delta_pair() -> GhwPair:
    """The forward difference with x_hat composed with the backward shift."""
    x = Polynomial.x()

    def lower(f: Polynomial) -> Polynomial:
        shifted = _shifted_int_coeffs(f, 1)
        if shifted is None:
            return f.compose_affine(1, 1) - f
        return Polynomial(a - b.numerator for a, b in zip(shifted, f.coeffs))

    def raiser(f: Polynomial) -> Polynomial:
        shifted = _shifted_int_coeffs(f, -1)
        if shifted is None:
            return x * f.compose_affine(1, -1)
        shifted.insert(0, 0)
        return Polynomial(shifted)

    return GhwPair(name="Delta, x*E^-1", lower=lower, raiser=raiser)


def psi_pair(ctx: PsiContext) -> GhwPair:
    """The psi-derivative with the deformed multiplication operator."""
    return GhwPair(
        name=f"psi-derivative, x_hat ({ctx.label})",
        lower=lambda f: psi_derivative(ctx, f),
        raiser=lambda f: x_hat_psi(ctx, f),
    )


# -- verification reports ---------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    inputs: str
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: str
    cases: int
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.identity} [{self.params}] cases={self.cases} {status}"
        if self.counterexample is not None:
            ce = self.counterexample
            line += f"\n  at {ce.inputs}: lhs={ce.lhs} rhs={ce.rhs}"
        return line


def _report(identity: str, params: str, cases: int, failures) -> VerificationReport:
    """failures: list of (inputs, lhs, rhs) tuples; first one is kept."""
    ce = None
    if failures:
        inputs, lhs, rhs = failures[0]
        ce = Counterexample(str(inputs), str(lhs), str(rhs))
    return VerificationReport(identity, params, cases, ce)


# -- identity verifiers ------------------------------------------------------

def verify_commutator(pair: GhwPair, N: int) -> VerificationReport:
    """Check (lower raiser - raiser lower) x^m = x^m for all 0 <= m <= N."""
    failures = []
    for m in range(N + 1):
        xm = Polynomial.monomial(m)
        lhs = pair.lower(pair.raiser(xm)) - pair.raiser(pair.lower(xm))
        if lhs != xm:
            failures.append((f"m={m}", lhs, xm))
            break
    return _report("commutator", f"pair={pair.name}, N={N}", N + 1, failures)


def verify_telescoping(ctx: PsiContext, n: int, f: Polynomial) -> VerificationReport:
    """Sum_k a^k (1 - ab) b^k f = f - a^(n+1) b^(n+1) f, with a the
    psi-antiderivative and b the psi-derivative."""
    a = lambda g: psi_antiderivative(ctx, g)
    b = lambda g: psi_derivative(ctx, g)
    lhs = Polynomial()
    bk = f  # b^k f
    for k in range(n + 1):
        inner = bk - a(b(bk))
        for _ in range(k):
            inner = a(inner)
        lhs = lhs + inner
        bk = b(bk)
    # bk is now b^(n+1) f
    tail = b(f)
    for _ in range(n):
        tail = b(tail)
    for _ in range(n + 1):
        tail = a(tail)
    rhs = f - tail
    failures = [] if lhs == rhs else [(f"n={n}, f={f}", lhs, rhs)]
    return _report("telescoping", f"psi={ctx.label}, n={n}", 1, failures)


def verify_bernoulli_identity(pair: GhwPair, n: int, f: Polynomial) -> VerificationReport:
    """p Sum_k (-q)^k p^k f / k!  ==  (-q)^n p^(n+1) f / n!"""
    acc = Polynomial()
    pk = f  # p^k f
    for k in range(n + 1):
        term = pk
        for _ in range(k):
            term = pair.raiser(term)
        sign = -1 if k % 2 else 1
        acc = acc + term * Fraction(sign, math.factorial(k))
        pk = pair.lower(pk)
    lhs = pair.lower(acc)
    # pk is now p^(n+1) f
    rhs = pk
    for _ in range(n):
        rhs = pair.raiser(rhs)
    rhs = rhs * Fraction((-1) ** n, math.factorial(n))
    failures = [] if lhs == rhs else [(f"n={n}, f={f}", lhs, rhs)]
    return _report("bernoulli", f"pair={pair.name}, n={n}", 1, failures)


def bernoulli_identity_sweep(pair: GhwPair, max_m: int, max_n: int) -> VerificationReport:
    """Bernoulli identity on all monomials x^m, m <= max_m, for every
    order n <= max_n.

    Both sides are scaled by n! so integer-coefficient pairs never leave
    the integers: with T_k = (-q)^k p^k f and S_n = sum_k (n!/k!) T_k
    (built by S_n = n S_(n-1) + T_n), the identity reads
    p S_n = (-q)^n p^(n+1) f, and the next term is one raiser application
    away from the right side just computed: T_(n+1) = -q rhs_n.
    """
    failures = []
    cases = 0
    for m in range(max_m + 1):
        if failures:
            break
        powers = [Polynomial.monomial(m)]  # p^k x^m
        for _ in range(max_n + 2):
            powers.append(pair.lower(powers[-1]))
        partial = Polynomial()  # S_(n-1)
        term = powers[0]  # T_n
        for n in range(max_n + 1):
            partial = partial * n + term
            lhs = pair.lower(partial)
            rhs = powers[n + 1]
            for _ in range(n):
                rhs = pair.raiser(rhs)
            rhs = rhs * Fraction((-1) ** n)
            cases += 1
            if lhs != rhs:
                failures.append((f"m={m}, n={n}", lhs, rhs))
                break
            term = -pair.raiser(rhs)
    return _report(
        "bernoulli", f"pair={pair.name}, m<={max_m}, n<={max_n}", cases, failures
    )


def verify_leibniz(ctx: PsiContext, f: Polynomial, g: Polynomial) -> VerificationReport:
    """psi-derivative of f * g = (Df) * g + f * (psi-derivative of g),
    with * the star product and D the classical derivative."""
    lhs = psi_derivative(ctx, star_psi(ctx, f, g))
    rhs = star_psi(ctx, f.derivative(), g) + star_psi(ctx, f, psi_derivative(ctx, g))
    failures = [] if lhs == rhs else [(f"f={f}, g={g}", lhs, rhs)]
    return _report("leibniz", f"psi={ctx.label}", 1, failures)


def verify_exp_addition(ctx: PsiContext, alpha: Scalar, beta: Scalar, N: int) -> VerificationReport:
    """exp(a x) * (psi-exp of b) agrees with the psi-exp of a+b up to degree N."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    lhs = star_psi(ctx, exp_poly(alpha, N), psi_exp(ctx, beta, N)).truncate(N)
    rhs = psi_exp(ctx, alpha + beta, N)
    failures = [] if lhs == rhs else [(f"alpha={alpha}, beta={beta}, N={N}", lhs, rhs)]
    return _report(
        "exp-addition", f"psi={ctx.label}, alpha={alpha}, beta={beta}, N={N}", N + 1, failures
    )


def verify_per_partes(
    ctx: PsiContext, f: Polynomial, g: Polynomial, a: Scalar, b: Scalar
) -> VerificationReport:
    """Integration by parts for the psi-integral and star product."""
    a, b = Fraction(a), Fraction(b)
    lhs = psi_definite_integral(ctx, star_psi(ctx, f, psi_derivative(ctx, g)), a, b)
    boundary = star_psi(ctx, f, g)
    rhs = (boundary(b) - boundary(a)) - psi_definite_integral(
        ctx, star_psi(ctx, f.derivative(), g), a, b
    )
    failures = [] if lhs == rhs else [(f"f={f}, g={g}, a={a}, b={b}", lhs, rhs)]
    return _report("per-partes", f"psi={ctx.label}, a={a}, b={b}", 1, failures)


def verify_fundamental_theorem(ctx: PsiContext, f: Polynomial) -> VerificationReport:
    """psi-derivative of the psi-antiderivative is the identity."""
    lhs = psi_derivative(ctx, psi_antiderivative(ctx, f))
    failures = [] if lhs == f else [(f"f={f}", lhs, f)]
    return _report("fundamental", f"psi={ctx.label}", 1, failures)


def historical_divided_difference_sum(f: Polynomial, signed: bool = True) -> Polynomial:
    """Sum_{n>=1} (+-1)^(n-1) x^(n-1) f^(n)(x) / n!, a finite sum on
    polynomials.  The unsigned variant (signed=False) is kept so the
    failure it produces can be demonstrated."""
    acc = Polynomial()
    fn = f.derivative()
    n = 1
    while fn:
        c = Fraction(1, math.factorial(n))
        if signed and n % 2 == 0:
            c = -c
        acc = acc + Polynomial.monomial(n - 1, c) * fn
        fn = fn.derivative()
        n += 1
    return acc


def historical_evaluation_sum(f: Polynomial) -> Polynomial:
    """Sum_{n>=0} (-1)^n x^n f^(n)(x) / n!, a finite sum on polynomials."""
    acc = Polynomial()
    fn = f
    n = 0
    while fn or n == 0:
        acc = acc + Polynomial.monomial(n, Fraction((-1) ** n, math.factorial(n))) * fn
        fn = fn.derivative()
        n += 1
    return acc


def verify_historical_series(f: Polynomial) -> VerificationReport:
    """The two classical series: the divided-difference expansion (with
    the alternating sign) and the zero-point evaluation expansion."""
    failures = []
    lhs1 = divided_difference_zero(f)
    rhs1 = historical_divided_difference_sum(f)
    if lhs1 != rhs1:
        failures.append((f"divided-difference, f={f}", lhs1, rhs1))
    lhs2 = Polynomial.constant(f(0))
    rhs2 = historical_evaluation_sum(f)
    if lhs2 != rhs2 and not failures:
        failures.append((f"evaluation, f={f}", lhs2, rhs2))
    return _report("historical", f"f={f}", 2, failures)
