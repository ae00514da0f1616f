"""Exception taxonomy shared by all titrees modules."""


class TitreesError(Exception):
    """Base class for every error raised by this package."""


class NotATree(TitreesError):
    """Edge set does not describe a tree (wrong count, cycle, loop, duplicate, disconnected)."""


class BadLabel(TitreesError):
    """Vertex label outside 0..n-1."""


class NotAnEdge(TitreesError):
    """The given vertex pair is not an edge of the tree."""


class BadFamilyParams(TitreesError):
    """Family parameters violate the family's defining constraints."""


class ParseError(TitreesError):
    """Family-spec text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BranchIsAlreadyPath(TitreesError):
    """Straightening requested for a branch that is already a pendent path."""


class NotPendentPaths(TitreesError):
    """The designated branches are not pendent paths at the given vertex."""


class NotABranchingVertex(TitreesError):
    """Operation requires a vertex of degree at least three."""


class LengthOrderViolated(TitreesError):
    """The designated long arm is shorter than the short arm."""


class InconsistentSizes(TitreesError):
    """Component sizes do not describe a valid vertex deletion."""


class PreconditionFailed(TitreesError):
    """A stated parity / perfect-square precondition does not hold."""


class ParityError(PreconditionFailed):
    """Order has the wrong parity for the requested dispatcher."""


class NonIntegerResult(TitreesError):
    """A closed form produced a non-exact division; signals an internal bug."""


class NotTI(TitreesError):
    """Operation requires a transmission-irregular tree."""


class DichotomyViolated(TitreesError):
    """Neither member of a claimed at-least-one-is-TI pair is TI; must never fire."""


class CapExceeded(TitreesError):
    """Requested enumeration order exceeds the configured cap."""


class VerificationFailed(TitreesError):
    """An exhaustive-search assertion did not hold; names the order and mismatch."""


class MalformedSparse6(TitreesError):
    """Input line is not valid sparse6/graph6 data."""
