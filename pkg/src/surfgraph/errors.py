"""Exception hierarchy.

Everything raised on purpose by this package derives from SurfGraphError,
so callers can catch one type at the boundary.  Validation errors carry
enough context in their message to locate the bad datum.
"""


class SurfGraphError(Exception):
    """Base class for all errors raised by surfgraph."""


class NonPermutation(SurfGraphError):
    """sigma is not a permutation of the dart set 0..2m-1."""


class OddDartCount(SurfGraphError):
    """The dart set cannot be partitioned into edges."""


class BadPairing(SurfGraphError):
    """edge_pairs is not a perfect matching on the darts."""


class UnknownEdge(SurfGraphError):
    """An edge id outside range(E) was supplied."""


class UnknownFace(SurfGraphError):
    """A face id outside range(F) was supplied."""


class DuplicateEdge(SurfGraphError):
    """An edge id was supplied twice where a set was expected."""


class GraphMismatch(SurfGraphError):
    """Two objects belong to different maps (e.g. orientation vs. map)."""


class InvalidCycle(SurfGraphError):
    """A claimed cycle or cocycle does not close up or repeats an edge."""


class BadModulus(SurfGraphError):
    """A modulus or evaluation point k < 1 was supplied where k >= 1 is required."""


class NotBoundaryAcyclic(SurfGraphError):
    """A witness vector was requested for an orientation outside BAO."""


class NonIntegerCoefficients(SurfGraphError):
    """An interpolated counting polynomial came out non-integral."""


class NoFit(SurfGraphError):
    """No quasipolynomial of period <= the cap fits the sampled values."""


class TooLarge(SurfGraphError):
    """The requested computation exceeds the built-in size guards."""
