"""Exception types raised across the package.

Every error is a subclass of CbalgError so callers (and the CLI) can
distinguish library failures from genuine bugs with one except clause.
"""


class CbalgError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(CbalgError):
    """Operands live in spaces of different dimensions."""


class FieldMismatch(CbalgError):
    """Operands are defined over different ground fields."""


class NotPrime(CbalgError):
    """A prime-field modulus failed the primality check."""


class InfiniteField(CbalgError):
    """An enumeration was requested over the rationals."""


class CapExceeded(CbalgError):
    """An enumeration or closure would exceed the requested cap."""


class BadScalar(CbalgError):
    """A scalar string does not parse over the given field."""


class NotAnIdeal(CbalgError):
    """A quotient was requested by a subspace that is not an ideal."""


class NotClosed(CbalgError):
    """A subspace is not closed under the product."""


class NotAntiCommutative(CbalgError):
    """An operation that needs x*x = 0 received a general algebra."""


class NotLie(CbalgError):
    """An operation restricted to Lie algebras received something else."""


class NotLeibniz(CbalgError):
    """Liesation was requested for a non-Leibniz algebra."""


class VerdictMismatch(CbalgError):
    """Two decision routes disagreed; this always signals a bug."""


class NotASubspace(CbalgError):
    """An enumerated element set failed the subspace verification."""


class IllDefined(CbalgError):
    """Decomposition data does not define a product (condition 5 fails)."""


class BadDims(CbalgError):
    """Decomposition data has inconsistent dimensions."""


class NotADirectSum(CbalgError):
    """The given subspaces do not split the ambient space."""


class UnknownName(CbalgError):
    """No catalog entry with the requested name."""


class MissingEpsilon(CbalgError):
    """A parametric catalog entry was requested without a parameter."""


class UnexpectedEpsilon(CbalgError):
    """A parameter was supplied for a non-parametric catalog entry."""


class CharTwo(CbalgError):
    """The catalog is only valid away from characteristic two."""


class NotAutomorphism(CbalgError):
    """A group generator does not preserve the product."""


class ParseError(CbalgError):
    """An algebra file is malformed; carries line/column when known."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = f"{message} (line {line}, column {col})"
        super().__init__(message)
        self.line = line
        self.col = col


class BadIndex(ParseError):
    """A 1-based basis index in a file is out of range."""


class DiagonalInAnticommutative(ParseError):
    """An anticommutative file listed a diagonal product e_i * e_i."""
