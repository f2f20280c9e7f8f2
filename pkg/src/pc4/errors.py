"""Exception types shared across the package.

Every error that corresponds to a violated input contract subclasses
Pc4Error, so callers can distinguish contract violations from bugs.
Errors raised while validating edge lists carry the offending triple.
"""

from __future__ import annotations


class Pc4Error(ValueError):
    """Base class for all input-contract violations."""


# ---------------------------------------------------------------- graph build


class EdgeError(Pc4Error):
    """An edge triple (u, v, color) failed validation."""

    def __init__(self, message: str, triple: tuple) -> None:
        super().__init__(f"{message}: {triple}")
        self.triple = triple


class SelfLoop(EdgeError):
    pass


class VertexOutOfRange(EdgeError):
    pass


class NonPositiveColor(EdgeError):
    pass


class DuplicateEdge(EdgeError):
    pass


class UnknownColor(Pc4Error):
    """A color id was requested that does not occur in the graph."""


# ---------------------------------------------------------------- detection


class NotACycle(Pc4Error):
    """A vertex sequence is not a cycle of the graph (repeat or missing edge)."""


class InvalidParameters(Pc4Error):
    """Numeric arguments outside the documented domain."""


# ---------------------------------------------------------------- threshold


class NotThreshold(Pc4Error):
    """The graph is not a threshold graph."""


class NotComplete(Pc4Error):
    """The operation requires a complete graph."""


class WrongColorCount(Pc4Error):
    """The operation requires a specific number of colors."""


class ClassNotThreshold(Pc4Error):
    """A color class that must be threshold is not.

    Carries the color id and the forbidden induced subgraph witness.
    """

    def __init__(self, color: int, witness=None) -> None:
        super().__init__(f"color class {color} is not a threshold graph")
        self.color = color
        self.witness = witness


class DecompositionFailed(Pc4Error):
    """A structure guaranteed by the theory could not be constructed.

    Reaching this means the input violates a theorem hypothesis or the
    input is a genuine counterexample; it is surfaced loudly on purpose.
    """


# ---------------------------------------------------------------- classify


class TooSmall(Pc4Error):
    """The graph has fewer vertices than the operation requires."""


class ProperlyColoredC4Present(Pc4Error):
    """A decomposition was requested for a graph containing a PC C4."""

    def __init__(self, witness) -> None:
        super().__init__(f"graph contains a properly colored C4: {witness}")
        self.witness = witness


class LayerColorMismatch(Pc4Error):
    """A peel layer did not saturate exactly as many colors as vertices."""


# ---------------------------------------------------------------- bounds


class EmptyClass(Pc4Error):
    """A color-class argument has no edges."""


class NotApplicable(Pc4Error):
    """A hypothesis of the identity fails; names the offending class."""

    def __init__(self, message: str, color: int | None = None, component=None):
        super().__init__(message)
        self.color = color
        self.component = component


# ---------------------------------------------------------------- generate


class InvalidSpec(Pc4Error):
    """A generation spec violates a constraint; the message names it."""


# ---------------------------------------------------------------- harness


class Infeasible(Pc4Error):
    """Predicted enumeration size exceeds the configured case budget."""

    def __init__(self, predicted: int, budget: int) -> None:
        super().__init__(
            f"predicted case count {predicted} exceeds budget {budget}"
        )
        self.predicted = predicted
        self.budget = budget


class InvalidTheoremId(Pc4Error):
    """Unknown theorem id passed to the verification harness."""
