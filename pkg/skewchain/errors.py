from typing import Optional


class SkewchainError(Exception):
    """Base class of all errors raised by skewchain"""


class InputError(SkewchainError):
    """The user input cannot be interpreted (exit code 2 on the CLI)"""


class ParseError(InputError):
    """
    A text input does not match its grammar.

    Parameters
    ----------
    message : str
        What went wrong
    column : Optional[int]
        1-based column of the offending character, if known
    tokenIndex : Optional[int]
        1-based index of the offending token, if known
    """

    def __init__(
            self,
            message: str,
            column: Optional[int] = None,
            tokenIndex: Optional[int] = None,
    ) -> None:
        self.column = column
        self.tokenIndex = tokenIndex
        location = []
        if tokenIndex is not None:
            location.append(f'token {tokenIndex}')

        if column is not None:
            location.append(f'column {column}')

        suffix = f' (at {", ".join(location)})' if location else ''
        super().__init__(message + suffix)


class ConfigError(InputError):
    """Invalid session configuration"""


class DomainError(SkewchainError):
    """A well-formed request that cannot be carried out (exit code 3)"""


class ZeroPolynomialError(DomainError):
    """An operation received the zero Ore polynomial where it needs r != 0"""


class ZeroRightHandSideError(DomainError):
    """solve was called with z = 0; the kernel computation handles this"""


class TruncatedInputError(DomainError):
    """An input series carries an O(u^a) term where an exact one is needed"""


class PreconditionError(DomainError):
    """A documented precondition of an operation does not hold"""


class NotPseudoCauchyError(DomainError):
    """A sequence was expected to be pseudo-Cauchy but is not"""


class TowerLimitError(DomainError):
    """No solution was found in the finite-field tower below the limit"""


class QuantifiedMatrixError(DomainError):
    """Quantifier elimination got a matrix that still has quantifiers"""


class FieldMismatchError(DomainError):
    """Two values were built over different ground fields"""
