"""
Exception hierarchy for foliation-kit.

Every error carries the CLI exit code of its class:
1 = usage/syntax, 2 = violated precondition, 3 = certificate failure.
"""

from typing import Optional


class FoliationKitError(Exception):
    """Base class for all toolkit errors."""
    exit_code: int = 2

    @property
    def kind(self) -> str:
        return type(self).__name__


# ============ Usage (exit 1) ============

class UsageError(FoliationKitError):
    """Malformed script or command line."""
    exit_code = 1


class ScriptSyntaxError(UsageError):
    """Script text does not follow the grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnboundName(UsageError):
    """A name is used before a let-binding introduces it."""


class ScriptArityError(UsageError):
    """A builtin or command is called with the wrong number of arguments."""


class ScriptTypeError(UsageError):
    """An operation is applied to values of the wrong kind."""


class UnknownCommand(UsageError):
    """A command name that the interpreter does not provide."""


# ============ Preconditions (exit 2) ============

class PreconditionError(FoliationKitError):
    """An operation was called outside its domain."""
    exit_code = 2


class MixedFields(PreconditionError):
    """Operands live in different number fields."""


class InvalidField(PreconditionError):
    """Minimal polynomial is not admissible (degree, squarefreeness)."""


class ArityMismatch(PreconditionError):
    """Operands have a different number of variables or components."""


class IndexOutOfRange(PreconditionError):
    """Variable or coordinate index outside 0..n-1."""


class DivisionByZero(PreconditionError):
    """Inversion or division by the zero element."""


class ZeroDivisor(PreconditionError):
    """Element shares a factor with a reducible minimal polynomial."""


class ZeroPolynomial(PreconditionError):
    """Operation undefined for the zero polynomial."""


ZeroPoly = ZeroPolynomial


class NotPolynomial(PreconditionError):
    """Operation requires polynomial (denominator-free) coefficients."""


class ZeroForm(PreconditionError):
    """Operation undefined for the zero form."""


class DegreeZero(PreconditionError):
    """Interior product of a 0-form."""


class ZeroField(PreconditionError):
    """Operation undefined for the zero vector field."""


class BadChart(PreconditionError):
    """Blow-up chart description is inconsistent."""


class NotCoplanar(PreconditionError):
    """Form is not a combination of the given generator pair."""


class DegenerateGenerators(PreconditionError):
    """Generator pair has identically zero wedge product."""


class NotTangentToEta(PreconditionError):
    """The 2-form is not tangent to one of the 1-forms."""


class DegeneratePencil(PreconditionError):
    """Constructed generators are dependent."""


class NotAPencil(PreconditionError):
    """Generators violate integrability or the pencil condition."""


class ZeroParameters(PreconditionError):
    """Pencil member requested for (a, b) = (0, 0)."""


class ZeroEigenvalue(PreconditionError):
    """Eigenvalue tuple contains zero where it must not."""


class NotTangent(PreconditionError):
    """Vector field is not tangent to the form."""


class NotIntegrable(PreconditionError):
    """Form fails the Frobenius condition."""


class NotStronglyDiagonalizable(PreconditionError):
    """Eigenvalues admit an integer relation."""


class NotClosed(PreconditionError):
    """A potential was requested for a form that is not closed."""


class NotPrimitive(PreconditionError):
    """Coefficients share a factor vanishing at the origin."""


class BadDegree(PreconditionError):
    """Degree parameter outside its admissible range."""


# ============ Certificates (exit 3) ============

class CertificateFailure(FoliationKitError):
    """A proved identity failed to verify; signals an implementation bug."""
    exit_code = 3

    def __init__(self, message: str, identity: Optional[str] = None):
        super().__init__(message if identity is None else f"{message}: {identity}")
        self.identity = identity
