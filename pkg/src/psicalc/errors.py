"""Exception hierarchy shared by all psicalc modules."""


class PsiCalcError(Exception):
    """Base class for all psicalc errors."""


class AdmissibilityError(PsiCalcError):
    """A sequence factor n_psi that must be nonzero turned out to be zero."""


class DomainError(PsiCalcError):
    """An argument is outside the domain an operation is defined on."""


class RangeError(PsiCalcError):
    """A lattice argument falls outside a table-backed function's range."""


class DegenerateParamsError(PsiCalcError):
    """Hahn parameters (q, h) = (1, 0) make the difference quotient 0/0."""


class ConvergenceError(PsiCalcError):
    """A truncated numeric series hit its term cap before the tail criterion."""


class InternalError(PsiCalcError):
    """An invariant that is a theorem failed; indicates a bug, not bad input."""


class ParseError(PsiCalcError):
    """Malformed expression text; carries the offset where parsing stopped."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
