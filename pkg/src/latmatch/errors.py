"""Exception types shared across the package."""


class LatmatchError(Exception):
    """Base class for all domain errors."""


class ChordError(LatmatchError):
    """Invalid chord diagram, lattice presentation, or arc-pair query."""


class PolytopeError(LatmatchError):
    """Vertex sets that do not form a lattice polytope."""


class SelfMirrorComponentError(PolytopeError):
    """A boundary cycle equal to its own mirror image; no canonical side choice."""


class DegenerateRectangleError(LatmatchError):
    """Rectangle corners sharing a coordinate."""


class StaleMoveError(LatmatchError):
    """A move referring to points absent from the current state."""


class NotApplicableError(LatmatchError):
    """Constructive method does not apply; use the exact oracle instead."""


class ResourceBoundError(LatmatchError):
    """Instance exceeds the configured exhaustive-search bound."""


class FormatError(LatmatchError):
    """Malformed input file."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
