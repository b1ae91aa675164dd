"""Exception types shared across the package."""


class InvalidJoin(ValueError):
    """Join factors share vertex labels."""


class DimensionMismatch(ValueError):
    """Operands are pure of different facet dimensions."""


class FaceNotPresent(ValueError):
    """The requested face is not a face of the complex."""


class TooLarge(ValueError):
    """A face enumeration would exceed its configured guard."""


class TooFewVertices(ValueError):
    """Not enough vertices for the requested construction."""


class NotCentrallySymmetric(ValueError):
    """The complex is not invariant under label negation."""


class InvalidParameters(ValueError):
    """Parameters outside the defined range of a construction."""


class ArityMismatch(ValueError):
    """Pair patterns of different lengths were compared."""


class NotSubcomplex(ValueError):
    """Expected a proper subcomplex and did not get one."""


class VertexClash(ValueError):
    """A fresh vertex label collides with an existing one."""


class UnknownVertex(ValueError):
    """A vertex label does not occur in the hypergraph."""


class RecursionInvariantViolated(RuntimeError):
    """A structural invariant of the sphere recursion failed; the
    construction aborts rather than return a damaged complex."""
