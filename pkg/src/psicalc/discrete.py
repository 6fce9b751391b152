"""Difference calculus on the integer lattice.

Forward and backward differences, definite summation, the iterated-sum
kernel, the Newton expansion with its summed Cauchy-type remainder, and
the Bernoulli-Maclaurin formula.  Functions on the lattice are either
polynomial-backed (any integer argument) or table-backed over a finite
range with an explicit start, so differencing can shift the range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import RangeError
from .poly import Polynomial, Scalar

Table = tuple[Fraction, ...]


class LatticeFunction:
    """A function on integers, backed by a polynomial or a finite table."""

    __slots__ = ("polynomial", "table", "start")

    def __init__(self, polynomial=None, table=None, start=0):
        if (polynomial is None) == (table is None):
            raise ValueError("exactly one of polynomial/table must be given")
        self.polynomial: Optional[Polynomial] = polynomial
        self.table: Optional[Table] = (
            None if table is None else tuple(Fraction(v) for v in table)
        )
        self.start = start

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> "LatticeFunction":
        return cls(polynomial=f)

    @classmethod
    def from_table(cls, values, start: int = 0) -> "LatticeFunction":
        values = tuple(values)
        if not values:
            raise RangeError("table-backed function needs at least one value")
        return cls(table=values, start=start)

    @property
    def is_polynomial(self) -> bool:
        return self.polynomial is not None

    @property
    def end(self) -> Optional[int]:
        """Last valid argument for a table-backed function."""
        if self.table is None:
            return None
        return self.start + len(self.table) - 1

    def __call__(self, x: int) -> Fraction:
        if self.polynomial is not None:
            return self.polynomial(x)
        if not self.start <= x <= self.end:
            raise RangeError(
                f"argument {x} outside table range [{self.start}, {self.end}]"
            )
        return self.table[x - self.start]


def forward_difference(f: LatticeFunction) -> LatticeFunction:
    """Delta f: x -> f(x+1) - f(x)."""
    if f.is_polynomial:
        p = f.polynomial
        return LatticeFunction.from_polynomial(p.compose_affine(1, 1) - p)
    if len(f.table) < 2:
        raise RangeError("difference of a single-entry table is empty")
    diffs = [b - a for a, b in zip(f.table, f.table[1:])]
    return LatticeFunction.from_table(diffs, start=f.start)


def backward_nabla(f: LatticeFunction) -> LatticeFunction:
    """nabla f: x -> f(x) - f(x-1); table ranges shift up by one."""
    if f.is_polynomial:
        p = f.polynomial
        return LatticeFunction.from_polynomial(p - p.compose_affine(1, -1))
    if len(f.table) < 2:
        raise RangeError("difference of a single-entry table is empty")
    diffs = [b - a for a, b in zip(f.table, f.table[1:])]
    return LatticeFunction.from_table(diffs, start=f.start + 1)


def definite_sum(f: LatticeFunction, x: int) -> Fraction:
    """Sum of f(k) for 0 <= k < x; the empty sum is 0."""
    if x < 0:
        raise RangeError(f"definite sum upper index must be >= 0, got {x}")
    acc = Fraction(0)
    for k in range(x):
        acc += f(k)
    return acc


def falling_factorial_poly(k: int) -> Polynomial:
    """x(x-1)...(x-k+1) as an exact polynomial; k = 0 gives 1."""
    acc = Polynomial.constant(1)
    for j in range(k):
        acc = acc * Polynomial([-j, 1])
    return acc


def falling_factorial_value(x: Scalar, k: int) -> Fraction:
    """x(x-1)...(x-k+1) evaluated directly."""
    acc = Fraction(1)
    x = Fraction(x)
    for j in range(k):
        acc *= x - j
    return acc


def iterated_sum(f: LatticeFunction, k: int, x: int) -> Fraction:
    """The k-fold definite sum via the closed kernel:
    sum over r < x of (x-r-1)^(falling k-1)/(k-1)! f(r)."""
    if k < 1:
        raise RangeError(f"iterated sum depth must be >= 1, got {k}")
    kfac = math.factorial(k - 1)
    acc = Fraction(0)
    for r in range(x):
        acc += falling_factorial_value(x - r - 1, k - 1) / kfac * f(r)
    return acc


@dataclass(frozen=True)
class DeltaExpansionReport:
    """Newton expansion report; the remainder is an integer-point
    evaluator because its defining sum has an argument-dependent bound."""

    order: int
    terms: tuple[Polynomial, ...]
    partial_sum: Polynomial
    remainder_at: Callable[[int], Fraction]
    checked_points: tuple[int, ...]
    exact: bool


def newton_expansion(
    f: LatticeFunction, n: int, sweep=range(17)
) -> DeltaExpansionReport:
    """Newton forward-difference expansion about 0 to order n with the
    summed Cauchy-type remainder, checked for exactness on `sweep`."""
    if not f.is_polynomial:
        raise RangeError("newton_expansion requires a polynomial-backed function")
    if n < 0:
        raise ValueError("expansion order must be nonnegative")
    terms = []
    dk = f
    for k in range(n + 1):
        terms.append(falling_factorial_poly(k) * (dk(0) / math.factorial(k)))
        dk = forward_difference(dk)
    partial = Polynomial()
    for t in terms:
        partial = partial + t

    # dk is now Delta^(n+1) f
    nfac = math.factorial(n)
    top = dk

    def remainder_at(x: int) -> Fraction:
        acc = Fraction(0)
        for r in range(x):
            acc += falling_factorial_value(x - r - 1, n) / nfac * top(r)
        return acc

    points = tuple(sweep)
    exact = all(partial(x) + remainder_at(x) == f(x) for x in points)
    return DeltaExpansionReport(
        order=n,
        terms=tuple(terms),
        partial_sum=partial,
        remainder_at=remainder_at,
        checked_points=points,
        exact=exact,
    )


@dataclass(frozen=True)
class MaclaurinReport:
    """Bernoulli-Maclaurin report: everything is a rational scalar."""

    alpha: int
    order: int
    terms: tuple[Fraction, ...]
    remainder: Fraction
    total: Fraction
    target: Fraction  # f(0)
    exact: bool


def bernoulli_maclaurin(
    f: LatticeFunction, alpha: int, n: int, legacy_signs: bool = False
) -> MaclaurinReport:
    """f(0) = sum_k (-1)^k alpha^(falling k)/k! (nabla^k f)(alpha) + R,
    R = (-1)^(n+1) sum_{r<alpha} r^(falling n)/n! (nabla^(n+1) f)(r+1).

    Exact for every n >= 0: summing the telescoped operator identity for
    the forward difference over 0 <= r < alpha gives exactly these signs.
    The widely printed variant with (-1)^(k+1) terms and a (-1)^n
    remainder is the negative of this one and totals -f(0); pass
    legacy_signs=True to reproduce it (its report is exact only when
    f(0) = 0).
    """
    if not f.is_polynomial:
        raise RangeError("bernoulli_maclaurin requires a polynomial-backed function")
    if alpha < 1:
        raise RangeError(f"expansion point must be a positive integer, got {alpha}")
    if n < 0:
        raise ValueError("expansion order must be nonnegative")
    flip = 1 if legacy_signs else 0
    terms = []
    dk = f
    for k in range(n + 1):
        value = (
            falling_factorial_value(alpha, k)
            / math.factorial(k)
            * Fraction(-1) ** (k + flip)
            * dk(alpha)
        )
        terms.append(value)
        dk = backward_nabla(dk)

    # dk is now nabla^(n+1) f
    nfac = math.factorial(n)
    remainder = Fraction(0)
    for r in range(alpha):
        remainder += falling_factorial_value(r, n) / nfac * dk(r + 1)
    remainder *= Fraction(-1) ** (n + 1 - flip)

    total = sum(terms, Fraction(0)) + remainder
    target = f(0)
    return MaclaurinReport(
        alpha=alpha,
        order=n,
        terms=tuple(terms),
        remainder=remainder,
        total=total,
        target=target,
        exact=total == target,
    )
