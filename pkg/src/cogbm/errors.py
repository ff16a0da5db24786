"""Exception types shared across the package."""

from __future__ import annotations


class CogbmError(Exception):
    """Base class for all cogbm errors."""


class ParseError(CogbmError):
    """A rejected line in a `.cbm` model file or an observation CSV.

    Attributes:
        line: 1-based line number of the offending source line.
        kind: one of the KIND_* constants below.
        message: human-readable description.
    """

    KIND_UNKNOWN_CONCEPT = "UnknownConcept"
    KIND_UNKNOWN_VERB = "UnknownVerb"
    KIND_SYNTAX = "Syntax"
    KIND_DUPLICATE_ELEMENT = "DuplicateElement"
    KIND_BAD_ARITY = "BadArity"

    def __init__(self, line: int, kind: str, message: str):
        super().__init__(f"line {line}: {kind}: {message}")
        self.line = line
        self.kind = kind
        self.message = message


class EmptyStimulusError(CogbmError):
    """A stimulus vector with no components."""


class DimensionMismatchError(CogbmError):
    """Input dimensions disagree with what the model was built for."""


class NonFiniteRewardError(CogbmError):
    """Reward signal is NaN or infinite."""


class EmptyDatasetError(CogbmError):
    """A fit was requested on zero samples."""


class LengthMismatchError(CogbmError):
    """Two series that must align have different lengths."""


class EmptySeriesError(CogbmError):
    """A series is too short for the requested statistic."""


class ConstantActualError(CogbmError):
    """R-squared is undefined: the actual series has zero variance."""


class ZeroBaseError(CogbmError):
    """Rate of change is undefined: a predecessor value is exactly zero."""


class TooFewRowsError(CogbmError):
    """A chronological split would leave train or test empty."""
