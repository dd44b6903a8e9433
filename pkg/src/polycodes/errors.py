"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "BudgetExceeded",
    "GenericityFailure",
    "Inapplicable",
    "InvalidInput",
    "InvalidPolytope",
    "TheoremViolation",
    "Undefined",
    "Unrealized",
]


class InvalidInput(ValueError):
    """Malformed or out-of-contract input."""


class InvalidPolytope(InvalidInput):
    """Incidence data failing the local simplicity checks.

    Carries the full list of violated checks in ``reasons``.
    """

    def __init__(self, reasons: list[str]):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


class Undefined(ValueError):
    """Quantity that does not exist, e.g. the minimum distance of the zero code."""


class BudgetExceeded(RuntimeError):
    """Requested computation is over the fixed enumeration budget."""


class Inapplicable(ValueError):
    """Operation whose hypothesis the input does not satisfy."""


class Unrealized(InvalidInput):
    """Coordinates required but the polytope carries none."""


class GenericityFailure(RuntimeError):
    """No admissible generic objective found within the retry budget."""


class TheoremViolation(AssertionError):
    """Two routes that must agree by theorem disagreed.

    This signals an internal inconsistency, never a property of a valid
    input; the CLI maps it to exit code 3.
    """
