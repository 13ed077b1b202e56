"""Exception types shared across the package."""


class CubeError(ValueError):
    """Base class for all domain errors raised by cubepaths."""


class InvalidLengthError(CubeError):
    """String length is outside the range a cube family supports."""


class InvalidVertexError(CubeError):
    """Vertex is not a member of the cube family it was used with."""


class InvalidArgumentError(CubeError):
    """Argument combination is outside the supported domain."""


class InvalidPathError(CubeError):
    """Sequence of vertices is not a valid shortest path."""


class InvalidPermutationError(CubeError):
    """Sequence is not a permutation of 1..n, or not in the required class."""
