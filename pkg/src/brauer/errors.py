"""Exception hierarchy shared by all modules."""


class BrauerError(Exception):
    """Base class for domain errors (the CLI maps these to exit status 1)."""


class TreeFormatError(BrauerError, ValueError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class TreeInvariantError(BrauerError, ValueError):
    """A tree description that parses but is not a valid Brauer tree.

    ``kind`` is one of ``"disconnected"``, ``"cycle present"``,
    ``"edge degree ≠ 2"``, ``"duplicate in rotation"``, ``"bad multiplicity"``
    or ``"empty tree"``.
    """

    def __init__(self, kind, detail=""):
        self.kind = kind
        super().__init__(f"{kind}: {detail}" if detail else kind)


class UnsupportedTreeError(BrauerError, ValueError):
    """Multiplicity > 1 or too few edges for the requested operation."""


class UnknownEdgeError(BrauerError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown edge"


class QuiverShapeError(BrauerError, ValueError):
    """A quiver whose arrows do not decompose into Brauer-tree cycles."""


class AlgebraError(BrauerError, ValueError):
    """Failure while building or using a finite-dimensional algebra."""


class ReflectionUndefinedError(BrauerError, ValueError):
    """The reflection at a vertex does not exist (self-extension or E(S) ≇ P(S))."""


class PlanBudgetError(BrauerError, RuntimeError):
    """Reduction to a line did not finish within the step budget."""

    def __init__(self, message, best=None, steps=()):
        self.best = best
        self.steps = tuple(steps)
        super().__init__(message)


class BoundExceeded(BrauerError, ValueError):
    pass
