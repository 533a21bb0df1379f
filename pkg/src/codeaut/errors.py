"""Typed errors shared across the package."""


class CodeautError(Exception):
    """Base class for package-specific failures."""


class LengthMismatchError(CodeautError, ValueError):
    """Operands live in spaces of different lengths."""


class EnumerationInfeasibleError(CodeautError):
    """The requested computation exceeds the configured enumeration cap."""


class ZeroCodeError(CodeautError, ValueError):
    """The zero code has no nonzero codeword to minimise over."""


class NonSquarefreeLengthError(CodeautError, ValueError):
    """Cyclic machinery requires odd length, where X^N - 1 is squarefree."""


class NoWitnessError(CodeautError, LookupError):
    """The family descriptor admits no regular-cycle witness."""


class UndecidedError(CodeautError):
    """A bounded search ran out of budget before reaching a certificate."""
