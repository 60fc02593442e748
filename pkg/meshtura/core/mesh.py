"""
Indexed polygon mesh for Meshtura.

Faces are cyclic lists of vertex indices; edges are derived by identifying
face sides that join the same pair of vertices.
"""

import logging
from dataclasses import dataclass, field
from typing import (
    AbstractSet,
    Dict,
    FrozenSet,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from meshtura.core.errors import (
    DegenerateFaceError,
    IndexOutOfRangeError,
    MissingPositionsError,
    PositionCountMismatchError,
    SelfLoopEdgeError,
)
from meshtura.core.unionfind import DisjointSet

logger = logging.getLogger(__name__)

EdgeKey = Tuple[int, int, int]  # (low vertex, high vertex, seam tag)


class FaceSide(NamedTuple):
    """Side `side` of face `face`, joining corners side and side + 1."""

    face: int
    side: int


class Corner(NamedTuple):
    """Corner `index` of face `face`."""

    face: int
    index: int


@dataclass(frozen=True)
class EdgeRecord:
    """An edge and the face sides that use it."""

    vertices: Tuple[int, int]
    sides: Tuple[FaceSide, ...]

    @property
    def face_degree(self) -> int:
        """Number of incident face sides."""
        return len(self.sides)

    @property
    def is_boundary(self) -> bool:
        return len(self.sides) == 1

    @property
    def faces(self) -> Tuple[int, ...]:
        """Distinct incident faces in ascending order."""
        return tuple(sorted({s.face for s in self.sides}))


@dataclass(frozen=True)
class Wedge:
    """Corners around a vertex that are chained through shared edges."""

    vertex: int
    corners: Tuple[Corner, ...]
    open_edges: Tuple[int, ...]  # edges at the corners that link to no other corner
    multiple_incidence: bool = False


@dataclass(frozen=True, eq=False)
class Mesh:
    """Immutable indexed polygon mesh with a derived edge table."""

    vertex_count: int
    faces: Tuple[Tuple[int, ...], ...]
    positions: Optional[np.ndarray]
    edges: Tuple[EdgeRecord, ...]
    face_edges: Tuple[Tuple[int, ...], ...]
    vertex_edges: Tuple[Tuple[int, ...], ...]
    vertex_faces: Tuple[Tuple[int, ...], ...]
    seam_sides: FrozenSet[FaceSide] = frozenset()
    _edge_lookup: Dict[EdgeKey, int] = field(default_factory=dict, repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def counts(self) -> Tuple[int, int, int]:
        """(V, E, F)."""
        return (self.vertex_count, self.edge_count, self.face_count)

    @property
    def has_positions(self) -> bool:
        return self.positions is not None

    @property
    def is_closed(self) -> bool:
        """True when no edge has exactly one incident face side."""
        return not any(edge.is_boundary for edge in self.edges)

    def check_vertex(self, vertex: int) -> None:
        if not 0 <= vertex < self.vertex_count:
            raise IndexOutOfRangeError(f"Vertex {vertex} out of range [0, {self.vertex_count})")

    def check_edge(self, edge: int) -> None:
        if not 0 <= edge < self.edge_count:
            raise IndexOutOfRangeError(f"Edge {edge} out of range [0, {self.edge_count})")

    def check_face(self, face: int) -> None:
        if not 0 <= face < self.face_count:
            raise IndexOutOfRangeError(f"Face {face} out of range [0, {self.face_count})")

    def edge_vertices(self, edge: int) -> Tuple[int, int]:
        return self.edges[edge].vertices

    def face_degree(self, edge: int) -> int:
        return self.edges[edge].face_degree

    def find_edge(self, u: int, v: int) -> Optional[int]:
        """Edge joining u and v, or None."""
        key = (min(u, v), max(u, v), 0)
        return self._edge_lookup.get(key)

    def other_vertex(self, edge: int, vertex: int) -> int:
        u, v = self.edges[edge].vertices
        return v if vertex == u else u

    def side_vertices(self, face: int, side: int) -> Tuple[int, int]:
        """Directed vertex pair of a face side, following the face winding."""
        cycle = self.faces[face]
        return cycle[side], cycle[(side + 1) % len(cycle)]

    def boundary_edges(self) -> Tuple[int, ...]:
        return tuple(e for e, edge in enumerate(self.edges) if edge.is_boundary)

    def corners(self, vertex: int) -> List[Corner]:
        """Corners at a vertex, ordered by (face, index)."""
        found = []
        for f in self.vertex_faces[vertex]:
            for i, v in enumerate(self.faces[f]):
                if v == vertex:
                    found.append(Corner(f, i))
        return found

    def corner_edges(self, corner: Corner) -> Tuple[int, int]:
        """(incoming edge, outgoing edge) of a corner."""
        sides = self.face_edges[corner.face]
        return sides[corner.index - 1], sides[corner.index]

    def corner_of_side(self, side: FaceSide, vertex: int) -> Corner:
        """The corner at `vertex` adjacent to a face side."""
        cycle = self.faces[side.face]
        if cycle[side.side] == vertex:
            return Corner(side.face, side.side)
        return Corner(side.face, (side.side + 1) % len(cycle))

    def edge_lengths(self) -> np.ndarray:
        """Euclidean length of every edge."""
        if self.positions is None:
            raise MissingPositionsError("Edge lengths need vertex positions")
        if not self.edges:
            return np.zeros(0, dtype=np.float64)
        pairs = np.array([edge.vertices for edge in self.edges], dtype=np.int64)
        deltas = self.positions[pairs[:, 0]] - self.positions[pairs[:, 1]]
        return np.linalg.norm(deltas, axis=1)

    def without_faces(self, face_ids: Iterable[int]) -> "Mesh":
        """Copy of the mesh with some faces removed (vertices are kept)."""
        drop = set(face_ids)
        for f in drop:
            self.check_face(f)
        kept = [cycle for f, cycle in enumerate(self.faces) if f not in drop]
        return build_mesh(self.vertex_count, kept, self.positions)

    def with_open_seams(self) -> "Mesh":
        """
        Copy without seam tags, for indexed file formats.

        Every seam side gets a new vertex at the midpoint of its two corners,
        so the two sides of a slit join different vertex pairs. V and E grow
        by one per seam side; Euler characteristic, components, and boundary
        cycles are unchanged. New vertices follow the seam sides in
        (face, side) order.
        """
        if not self.seam_sides:
            return self

        seam_order = sorted(self.seam_sides)
        new_vertex = {side: self.vertex_count + k for k, side in enumerate(seam_order)}
        faces = [list(cycle) for cycle in self.faces]
        # Later sides first keeps earlier insertion points valid
        for side in reversed(seam_order):
            faces[side.face].insert(side.side + 1, new_vertex[side])

        positions = None
        if self.positions is not None:
            ends = np.array([self.side_vertices(s.face, s.side) for s in seam_order], dtype=np.int64)
            midpoints = (self.positions[ends[:, 0]] + self.positions[ends[:, 1]]) / 2.0
            positions = np.vstack([self.positions, midpoints])

        return build_mesh(self.vertex_count + len(seam_order), faces, positions)


def build_mesh(
    vertex_count: int,
    faces: Iterable[Sequence[int]],
    positions: Optional[Sequence[Sequence[float]]] = None,
    seam_sides: Optional[Iterable[Tuple[int, int]]] = None,
) -> Mesh:
    """
    Build a mesh from an indexed face list.

    Args:
        vertex_count: Number of vertices (V)
        faces: Cyclic vertex-index lists, one per face
        positions: Optional (V, 3) point table
        seam_sides: Face sides (face, side) that must not be merged with the
            opposite side of the same vertex pair; used for cut seams

    Returns:
        Mesh with edge ids in first-occurrence order over faces, then sides
    """
    if vertex_count < 0:
        raise IndexOutOfRangeError(f"Negative vertex count {vertex_count}")

    face_list: List[Tuple[int, ...]] = []
    for f, face in enumerate(faces):
        cycle = tuple(int(v) for v in face)
        if len(cycle) < 3:
            raise DegenerateFaceError(f"Face {f} has {len(cycle)} corners; at least 3 needed")
        for v in cycle:
            if not 0 <= v < vertex_count:
                raise IndexOutOfRangeError(
                    f"Face {f} references vertex {v}; vertex count is {vertex_count}"
                )
        for i, v in enumerate(cycle):
            if v == cycle[(i + 1) % len(cycle)]:
                raise SelfLoopEdgeError(f"Face {f} repeats vertex {v} on side {i}")
        face_list.append(cycle)

    point_table = _coerce_positions(vertex_count, positions)
    seams = frozenset(FaceSide(int(f), int(s)) for f, s in (seam_sides or ()))

    lookup: Dict[EdgeKey, int] = {}
    edge_pairs: List[Tuple[int, int]] = []
    edge_sides: List[List[FaceSide]] = []
    face_edges: List[Tuple[int, ...]] = []
    vertex_edges: List[List[int]] = [[] for _ in range(vertex_count)]
    vertex_faces: List[List[int]] = [[] for _ in range(vertex_count)]

    for f, cycle in enumerate(face_list):
        sides = []
        n = len(cycle)
        for i in range(n):
            u, v = cycle[i], cycle[(i + 1) % n]
            side = FaceSide(f, i)
            key = (min(u, v), max(u, v), 1 if side in seams else 0)
            edge = lookup.get(key)
            if edge is None:
                edge = len(edge_pairs)
                lookup[key] = edge
                edge_pairs.append((key[0], key[1]))
                edge_sides.append([])
                vertex_edges[key[0]].append(edge)
                vertex_edges[key[1]].append(edge)
            edge_sides[edge].append(side)
            sides.append(edge)
        face_edges.append(tuple(sides))
        for v in sorted(set(cycle)):
            vertex_faces[v].append(f)

    edges = tuple(
        EdgeRecord(vertices=pair, sides=tuple(sides))
        for pair, sides in zip(edge_pairs, edge_sides)
    )

    mesh = Mesh(
        vertex_count=vertex_count,
        faces=tuple(face_list),
        positions=point_table,
        edges=edges,
        face_edges=tuple(face_edges),
        vertex_edges=tuple(tuple(sorted(es)) for es in vertex_edges),
        vertex_faces=tuple(tuple(fs) for fs in vertex_faces),
        seam_sides=seams,
        _edge_lookup=lookup,
    )
    logger.debug("Built mesh V=%d E=%d F=%d", *mesh.counts)
    return mesh


def _coerce_positions(
    vertex_count: int, positions: Optional[Sequence[Sequence[float]]]
) -> Optional[np.ndarray]:
    """Validate and freeze the position table."""
    if positions is None:
        return None

    table = np.array(positions, dtype=np.float64)
    if table.size == 0:
        table = table.reshape(0, 3)
    if table.ndim != 2 or table.shape[1] != 3:
        raise PositionCountMismatchError(f"Positions must be 3D points, got shape {table.shape}")
    if table.shape[0] != vertex_count:
        raise PositionCountMismatchError(
            f"{table.shape[0]} positions given for {vertex_count} vertices"
        )
    table.setflags(write=False)
    return table


def corner_wedges(
    mesh: Mesh, vertex: int, blocked: AbstractSet[int] = frozenset()
) -> List[Wedge]:
    """
    Group the corners at a vertex into wedges.

    Two corners belong to the same wedge when they are chained through edges
    with exactly two incident sides that are not blocked. A manifold interior
    vertex has one closed wedge; a boundary vertex of a fan has one open wedge
    with two open boundary edges.

    Args:
        mesh: Mesh to inspect
        vertex: Vertex id
        blocked: Edges that never link corners (cut edges)

    Returns:
        Wedges ordered by their lowest corner
    """
    corners = mesh.corners(vertex)
    if not corners:
        return []

    links: DisjointSet[Corner] = DisjointSet()
    for corner in corners:
        links.add(corner)

    for e in mesh.vertex_edges[vertex]:
        record = mesh.edges[e]
        if e in blocked or record.face_degree != 2:
            continue
        a = mesh.corner_of_side(record.sides[0], vertex)
        b = mesh.corner_of_side(record.sides[1], vertex)
        links.union(a, b)

    face_corner_counts: Dict[int, int] = {}
    for corner in corners:
        face_corner_counts[corner.face] = face_corner_counts.get(corner.face, 0) + 1

    wedges = []
    for group in links.groups():
        members = tuple(sorted(group))
        open_edges = []
        for corner in members:
            for e in mesh.corner_edges(corner):
                if e in blocked or mesh.edges[e].face_degree != 2:
                    open_edges.append(e)
        wedges.append(
            Wedge(
                vertex=vertex,
                corners=members,
                open_edges=tuple(open_edges),
                multiple_incidence=any(face_corner_counts[c.face] > 1 for c in members),
            )
        )

    wedges.sort(key=lambda w: w.corners[0])
    return wedges
