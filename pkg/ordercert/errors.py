"""Exception hierarchy for ordercert."""

from typing import Any, Optional


class OrdercertError(Exception):
    """Base class for every error raised by ordercert."""


class GraphInputError(OrdercertError, ValueError):
    """A graph could not be built from the given vertices and edges."""


class GraphFormatError(GraphInputError):
    """Graph text (graph6 or edge list) is malformed."""


class OrderingError(OrdercertError, ValueError):
    """A vertex ordering or prefix is not valid for the graph."""


class RepresentationError(OrdercertError, ValueError):
    """An interval model, diagram, orientation or subtree family is malformed."""


class FamilySpecError(OrdercertError, ValueError):
    """A graph family name or its parameters are invalid."""


class ConfigurationError(OrdercertError, ValueError):
    """A configuration value (e.g. ORDERCERT_MAX_N) is invalid."""


class SizeGuardError(OrdercertError):
    """An instance exceeds a size guard; raised instead of running slowly."""

    def __init__(self, guard: str, n: int, limit: int):
        """Record which guard tripped and the offending size."""
        self.guard = guard
        self.n = n
        self.limit = limit
        super().__init__(
            f"too large: n={n} exceeds the {guard} limit of {limit} "
            f"(raise it with --max-n or ORDERCERT_MAX_N)"
        )


class PreconditionError(OrdercertError, ValueError):
    """A construction was called on input violating its precondition.

    Attributes:
        witness: The object proving the violation (a condition witness, an
            offending vertex pair or an edge), or None.

    """

    def __init__(self, message: str, witness: Optional[Any] = None):
        """Store the message and the violation witness."""
        self.witness = witness
        super().__init__(message)


class NotInClassError(OrdercertError):
    """A graph is not a member of the class an operation requires.

    Attributes:
        recognition: The negative recognition result (the refutation).

    """

    def __init__(self, message: str, recognition: Any):
        """Store the message and the refuting recognition result."""
        self.recognition = recognition
        super().__init__(message)


class InvariantError(OrdercertError, RuntimeError):
    """A constructed certificate failed re-validation. Should be unreachable."""
