"""Admissible sequences and the derived quantities n_psi, n_psi!, and
falling psi-factorials.

An admissible sequence supplies one nonzero rational factor n_psi per
positive integer n.  Three built-in families are provided (the classical
integers, the Gauss q-integers, and the Fibonacci numbers) plus custom
factor lists.  A PsiContext wraps a sequence with memoized factor and
factorial tables; it is the parameter every psi-operator takes.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import AdmissibilityError, DomainError, ParseError

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' with optional leading minus."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational: {text!r}", 0)
    return Fraction(text)


@dataclass(frozen=True)
class AdmissibleSequence:
    """Provider of the raw factors n_psi, n >= 1."""

    kind: str  # "classical" | "gauss_q" | "fibonomial" | "custom"
    q: Optional[Fraction] = None
    factors: Optional[tuple[Fraction, ...]] = None

    @classmethod
    def classical(cls) -> "AdmissibleSequence":
        return cls("classical")

    @classmethod
    def gauss_q(cls, q) -> "AdmissibleSequence":
        return cls("gauss_q", q=Fraction(q))

    @classmethod
    def fibonomial(cls) -> "AdmissibleSequence":
        return cls("fibonomial")

    @classmethod
    def custom(cls, factors) -> "AdmissibleSequence":
        return cls("custom", factors=tuple(Fraction(f) for f in factors))

    def raw_factor(self, n: int) -> Fraction:
        """n_psi without the nonzero check (admissibility_check needs raw values)."""
        if n < 1:
            raise DomainError(f"sequence index must be a positive integer, got {n}")
        if self.kind == "classical":
            return Fraction(n)
        if self.kind == "gauss_q":
            q = self.q
            if q == 1:
                return Fraction(n)
            return (1 - q**n) / (1 - q)
        if self.kind == "fibonomial":
            a, b = 1, 1  # F_1, F_2
            for _ in range(n - 1):
                a, b = b, a + b
            return Fraction(a)
        if self.kind == "custom":
            if n > len(self.factors):
                raise DomainError(
                    f"custom sequence has {len(self.factors)} factors, index {n} requested"
                )
            return self.factors[n - 1]
        raise ValueError(f"unknown sequence kind {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind == "classical":
            return "classical"
        if self.kind == "gauss_q":
            return f"q:{self.q}"
        if self.kind == "fibonomial":
            return "fib"
        return "custom:" + ",".join(str(f) for f in self.factors)


class PsiContext:
    """An admissible sequence plus memoized n_psi and n_psi! tables.

    Memo growth is guarded by a lock so contexts can be shared between
    threads; all returned values are immutable Fractions.
    """

    def __init__(self, sequence: AdmissibleSequence):
        self.sequence = sequence
        self._factors: dict[int, Fraction] = {}
        self._factorials: dict[int, Fraction] = {0: Fraction(1)}
        self._lock = threading.Lock()

    @property
    def label(self) -> str:
        return self.sequence.label

    def factor(self, n: int) -> Fraction:
        """n_psi; raises AdmissibilityError when the sequence value is zero."""
        if n < 1:
            raise DomainError(f"n_psi requires n >= 1, got {n}")
        with self._lock:
            v = self._factors.get(n)
            if v is None:
                v = self.sequence.raw_factor(n)
                self._factors[n] = v
        if v == 0:
            raise AdmissibilityError(f"{self.label}: {n}_psi = 0")
        return v

    def factorial(self, n: int) -> Fraction:
        """n_psi! = n_psi * (n-1)_psi!, with 0_psi! = 1."""
        if n < 0:
            raise DomainError(f"n_psi! requires n >= 0, got {n}")
        with self._lock:
            cached = self._factorials.get(n)
        if cached is not None:
            return cached
        top = max(self._factorials)
        acc = self._factorials[top]
        for k in range(top + 1, n + 1):
            acc = acc * self.factor(k)
            with self._lock:
                self._factorials[k] = acc
        return acc

    def falling_factorial(self, x: int, k: int) -> Fraction:
        """x_psi (x-1)_psi ... (x-k+1)_psi; the empty product (k = 0) is 1."""
        if k < 0:
            raise DomainError(f"falling factorial length must be >= 0, got {k}")
        if k > 0 and x - k + 1 < 1:
            raise DomainError(
                f"falling factorial {x}^({k}) would hit a non-positive index"
            )
        acc = Fraction(1)
        for j in range(k):
            acc *= self.factor(x - j)
        return acc


# Module-level convenience names, as thin wrappers over the context methods.

def psi_factor(ctx: PsiContext, n: int) -> Fraction:
    return ctx.factor(n)


def psi_factorial(ctx: PsiContext, n: int) -> Fraction:
    return ctx.factorial(n)


def psi_falling_factorial(ctx: PsiContext, x: int, k: int) -> Fraction:
    return ctx.falling_factorial(x, k)


@dataclass(frozen=True)
class AdmissibilityReport:
    label: str
    limit: int
    first_zero: Optional[int]

    @property
    def ok(self) -> bool:
        return self.first_zero is None


def admissibility_check(ctx: PsiContext, N: int) -> AdmissibilityReport:
    """Report whether n_psi != 0 for all 1 <= n <= N; never raises."""
    if N < 1:
        raise DomainError(f"admissibility bound must be >= 1, got {N}")
    for n in range(1, N + 1):
        try:
            value = ctx.sequence.raw_factor(n)
        except DomainError:
            return AdmissibilityReport(ctx.label, N, n)
        if value == 0:
            return AdmissibilityReport(ctx.label, N, n)
    return AdmissibilityReport(ctx.label, N, None)


def parse_psi_spec(text: str) -> PsiContext:
    """Parse the psi-spec grammar:

    ``classical`` | ``q:<rational>`` | ``fib`` | ``custom:<r1>,<r2>,...``
    """
    text = text.strip()
    if text == "classical":
        return PsiContext(AdmissibleSequence.classical())
    if text == "fib":
        return PsiContext(AdmissibleSequence.fibonomial())
    if text.startswith("q:"):
        return PsiContext(AdmissibleSequence.gauss_q(parse_rational(text[2:])))
    if text.startswith("custom:"):
        parts = text[len("custom:"):].split(",")
        if not parts or parts == [""]:
            raise ParseError("custom psi-spec needs at least one factor", len("custom:"))
        return PsiContext(
            AdmissibleSequence.custom([parse_rational(p) for p in parts])
        )
    raise ParseError(f"unrecognized psi-spec {text!r}", 0)
