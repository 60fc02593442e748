"""
Exception hierarchy for Meshtura.

Every error raised by the toolkit derives from MeshturaError.
"""

from typing import Iterator, Optional, Tuple


class MeshturaError(Exception):
    """Base class for all toolkit errors."""


class MeshBuildError(MeshturaError, ValueError):
    """Raised when a face list cannot be turned into a mesh."""


class IndexOutOfRangeError(MeshBuildError, IndexError):
    """A vertex, edge, or face index lies outside its table."""


class SelfLoopEdgeError(MeshBuildError):
    """A face repeats a vertex on two consecutive corners."""


class DegenerateFaceError(MeshBuildError):
    """A face has fewer than three corners."""


class PositionCountMismatchError(MeshBuildError):
    """The position table does not have one 3D point per vertex."""


class DimensionMismatchError(MeshturaError, ValueError):
    """Element dimensions do not fit the requested operator."""


class NotEdgeManifoldError(MeshturaError):
    """An operation needs every edge to have one or two incident faces."""


class MeshNotManifoldError(NotEdgeManifoldError):
    """Cut-graph construction was given a non-manifold mesh."""


class MeshNotClosedError(MeshturaError):
    """An operation needs a mesh without boundary edges."""


class NonManifoldBoundaryError(MeshturaError):
    """Boundary edges cannot be paired into cycles."""


class GenusUndefinedError(MeshturaError):
    """The genus cannot be derived from the Euler-Poincare formula."""


class InvalidFiltrationError(MeshturaError, ValueError):
    """An element ordering violates the filtration rules."""


class TreeEdgeError(MeshturaError, ValueError):
    """A loop was requested for an edge that belongs to the tree."""


class InvalidRootError(MeshturaError, ValueError):
    """The root vertex has no incident face."""


class CutEdgeOnBoundaryError(MeshturaError, ValueError):
    """A cut edge is already a boundary edge."""


class EmptyCutOnPositiveGenusError(MeshturaError, ValueError):
    """An empty cut cannot turn a surface of positive genus into a disc."""


class InvalidSpecError(MeshturaError, ValueError):
    """A generator spec names an unknown kind or invalid parameters."""


class MissingPositionsError(MeshturaError, ValueError):
    """Geometry output was requested for a mesh without positions."""


class MeshParseError(MeshturaError, ValueError):
    """A mesh file could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def decode_lines(data: bytes) -> Iterator[Tuple[int, str]]:
    """
    Yield (1-based line number, text) for each line of a UTF-8 mesh file.

    Raises:
        MeshParseError: a line is not valid UTF-8
    """
    for line_number, raw in enumerate(data.splitlines(), start=1):
        try:
            yield line_number, raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MeshParseError(f"Invalid UTF-8 at byte {e.start}", line_number) from None
