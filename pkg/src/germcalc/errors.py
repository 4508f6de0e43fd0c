"""Exception hierarchy shared by the library, the service and the CLI.

Every error carries a machine-readable ``kind`` so the HTTP layer can emit a
structured reason and the CLI can map it to its exit-code contract.
"""

from __future__ import annotations


class GermcalcError(Exception):
    """Base class for all library errors."""

    kind = "error"


class DimensionError(GermcalcError):
    """Operands live in rings with different numbers of variables."""

    kind = "invalid-input"


class InvalidInputError(GermcalcError):
    """A value violates a documented precondition."""

    kind = "invalid-input"


class ParseError(GermcalcError):
    """Expression text could not be parsed; carries a 1-based position."""

    kind = "parse"

    def __init__(self, message: str, position: int):
        super().__init__(f"col {position}: {message}")
        self.position = position


class NonIsolatedError(GermcalcError):
    """A function has a non-isolated critical locus where isolation is required."""

    kind = "non-isolated"


class NonIcisError(GermcalcError):
    """A germ fails the isolated-complete-intersection admission check."""

    kind = "non-icis"


class GenericityError(GermcalcError):
    """No sampled linear form / perturbation was generic enough."""

    kind = "genericity"


class CrossCheckError(GermcalcError):
    """Two independent computation routes disagree."""

    kind = "cross-check"


class ResourceLimitError(GermcalcError):
    """A configured work bound (pair queue, monomial count) was exceeded."""

    kind = "resource-limit"


class OracleInconclusiveError(GermcalcError):
    """The truncated colength oracle did not stabilize below its degree cap."""

    kind = "inconclusive"
