"""
Cutting a closed mesh open along an edge set.

Every cut edge becomes two boundary edges and every vertex on the cut is
replaced by one copy per wedge of faces between consecutive cut edges.
"""

import logging
from typing import Dict, FrozenSet, List, Set, Tuple

import numpy as np

from meshtura.core.errors import (
    CutEdgeOnBoundaryError,
    DimensionMismatchError,
    EmptyCutOnPositiveGenusError,
    MeshNotClosedError,
    NotEdgeManifoldError,
)
from meshtura.core.cutgraph import FaceCoTree
from meshtura.core.mesh import Corner, FaceSide, Mesh, build_mesh, corner_wedges
from meshtura.core.models import Dimension, ElementSet
from meshtura.core.topology import betti_closed_form

logger = logging.getLogger(__name__)


def _side_pair(faces: List[Tuple[int, ...]], side: FaceSide) -> FrozenSet[int]:
    cycle = faces[side.face]
    return frozenset((cycle[side.side], cycle[(side.side + 1) % len(cycle)]))


def cut_mesh(mesh: Mesh, cut: ElementSet) -> Mesh:
    """
    Cut a closed edge-manifold mesh along a set of edges.

    A vertex with d cut edges in its fan becomes d vertices. A cut edge whose
    endpoints are not split (an isolated slit) still becomes two boundary
    edges joining the same vertex pair.

    Args:
        mesh: Closed edge-manifold mesh
        cut: Edge set to cut along

    Raises:
        CutEdgeOnBoundaryError: a cut edge is already a boundary edge
        MeshNotClosedError: the mesh has boundary edges
        NotEdgeManifoldError: some edge has more than two incident faces
        EmptyCutOnPositiveGenusError: nothing to cut but the mesh has handles

    Returns:
        New mesh; vertex ids of the input are kept for the first wedge of
        every vertex, extra copies are appended with copied positions
    """
    if cut.dimension != Dimension.EDGE:
        raise DimensionMismatchError("Meshes are cut along edge sets")
    for e in cut:
        mesh.check_edge(e)
        if mesh.edges[e].is_boundary:
            raise CutEdgeOnBoundaryError(f"Cut edge {e} is already a boundary edge")
    if not mesh.is_closed:
        raise MeshNotClosedError("Only closed meshes can be cut")
    if any(record.face_degree > 2 for record in mesh.edges):
        raise NotEdgeManifoldError("Only edge-manifold meshes can be cut")

    if cut.is_empty:
        if betti_closed_form(mesh).b1 > 0:
            raise EmptyCutOnPositiveGenusError(
                "An empty cut leaves a surface with handles; it would not be a disc"
            )
        return build_mesh(mesh.vertex_count, mesh.faces, mesh.positions, mesh.seam_sides)

    blocked = cut.members
    touched = sorted({v for e in cut for v in mesh.edge_vertices(e)})

    corner_vertex: Dict[Corner, int] = {}
    copies_of: List[int] = []
    next_id = mesh.vertex_count
    for v in touched:
        for wedge in corner_wedges(mesh, v, blocked)[1:]:
            for corner in wedge.corners:
                corner_vertex[corner] = next_id
            copies_of.append(v)
            next_id += 1

    faces = [
        tuple(corner_vertex.get(Corner(f, i), v) for i, v in enumerate(cycle))
        for f, cycle in enumerate(mesh.faces)
    ]

    seams: Set[FaceSide] = set(mesh.seam_sides)
    for e in cut:
        first, second = sorted(mesh.edges[e].sides)
        if _side_pair(faces, first) == _side_pair(faces, second):
            seams.add(second)

    positions = None
    if mesh.positions is not None:
        positions = np.vstack([mesh.positions, mesh.positions[copies_of]])

    result = build_mesh(next_id, faces, positions, seams)
    logger.info(
        "Cut %d edges: V %d -> %d, E %d -> %d",
        len(cut),
        mesh.vertex_count,
        result.vertex_count,
        mesh.edge_count,
        result.edge_count,
    )
    return result


def cut_all_but_cotree(mesh: Mesh, ct: FaceCoTree) -> Mesh:
    """Cut along every edge of the co-tree's component except the co-tree edges."""
    component = ElementSet.of(
        Dimension.EDGE, (e for f in ct.faces for e in mesh.face_edges[f])
    )
    return cut_mesh(mesh, ElementSet(Dimension.EDGE, component.members - ct.edges.members))
