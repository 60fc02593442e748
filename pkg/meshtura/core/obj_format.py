"""
Wavefront OBJ reader and writer.

Only geometry and polygon faces are read; normals, texture coordinates,
materials, groups, and line elements are skipped. The writer can export a
set of seam edges as `l` polylines so cut graphs show up in viewers.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Set

from meshtura import __version__
from meshtura.core.errors import (
    DimensionMismatchError,
    MeshParseError,
    MissingPositionsError,
    decode_lines,
)
from meshtura.core.mesh import Mesh, build_mesh
from meshtura.core.models import Dimension, ElementSet

logger = logging.getLogger(__name__)

_SKIPPED = {"vn", "vt", "vp", "l", "p", "g", "o", "s", "usemtl", "mtllib", "cstype", "curv", "surf"}


def _resolve_index(token: str, vertex_total: int, line_number: int) -> int:
    """Convert a 1-based (or negative relative) OBJ index to 0-based."""
    head = token.split("/")[0]
    try:
        index = int(head)
    except ValueError as e:
        raise MeshParseError(f"Invalid vertex index {token!r}", line_number) from e

    if index == 0:
        raise MeshParseError("OBJ vertex indices start at 1; got 0", line_number)
    if index < 0:
        resolved = vertex_total + index
        if resolved < 0:
            raise MeshParseError(f"Relative index {index} points before the first vertex", line_number)
        return resolved
    return index - 1


def parse_obj(data: bytes) -> Mesh:
    """
    Parse OBJ text into a mesh.

    Args:
        data: Raw file contents

    Raises:
        MeshParseError: malformed statement (message carries the line number)
        IndexOutOfRangeError: a face references a vertex that was never defined

    Returns:
        Mesh with faces in file order and positions from the `v` statements
    """
    positions: List[List[float]] = []
    faces: List[List[int]] = []

    for line_number, raw in decode_lines(data):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        keyword, *tokens = line.split()
        if keyword == "v":
            if len(tokens) < 3:
                raise MeshParseError("Vertex needs three coordinates", line_number)
            try:
                positions.append([float(t) for t in tokens[:3]])
            except ValueError as e:
                raise MeshParseError(f"Invalid coordinate in {line!r}", line_number) from e
        elif keyword == "f":
            if len(tokens) < 3:
                raise MeshParseError(f"Face needs at least 3 vertices, got {len(tokens)}", line_number)
            faces.append([_resolve_index(t, len(positions), line_number) for t in tokens])
        elif keyword in _SKIPPED:
            continue
        else:
            logger.debug("Skipping unsupported OBJ statement %r on line %d", keyword, line_number)

    return build_mesh(len(positions), faces, positions if positions else None)


def _format_float(value: float) -> str:
    return repr(float(value))


def seam_polylines(mesh: Mesh, seams: ElementSet) -> List[List[int]]:
    """
    Split a seam edge set into vertex polylines.

    Polylines break at vertices whose seam degree is not 2; components
    without such vertices come out as closed polylines (first vertex repeated).
    """
    if seams.dimension != Dimension.EDGE:
        raise DimensionMismatchError("Seams must be an edge set")

    incident: Dict[int, List[int]] = defaultdict(list)
    for e in seams:
        mesh.check_edge(e)
        for v in mesh.edge_vertices(e):
            incident[v].append(e)

    used: Set[int] = set()
    polylines: List[List[int]] = []

    def walk(start_vertex: int, first_edge: int) -> List[int]:
        path = [start_vertex]
        vertex, edge = start_vertex, first_edge
        while True:
            used.add(edge)
            vertex = mesh.other_vertex(edge, vertex)
            path.append(vertex)
            if len(incident[vertex]) != 2:
                return path
            onward = [e for e in incident[vertex] if e not in used]
            if not onward:
                return path
            edge = onward[0]

    for v in sorted(incident):
        if len(incident[v]) == 2:
            continue
        for e in sorted(incident[v]):
            if e not in used:
                polylines.append(walk(v, e))

    for e in seams:
        if e not in used:
            polylines.append(walk(mesh.edge_vertices(e)[0], e))

    return polylines


def write_obj(mesh: Mesh, seams: Optional[ElementSet] = None) -> bytes:
    """
    Serialize a mesh as OBJ.

    Meshes with seam sides (isolated slits from `cut_mesh`) are written as
    `mesh.with_open_seams()`: one extra vertex and edge per seam side, so the
    file reads back with the same boundary cycles. Other meshes read back
    with identical V, E, F and faces.

    Args:
        mesh: Mesh with positions (an empty mesh needs none)
        seams: Optional edge set of `mesh` written as `l` polylines after the faces

    Raises:
        MissingPositionsError: the mesh has vertices but no positions

    Returns:
        UTF-8 encoded OBJ text
    """
    if mesh.vertex_count and mesh.positions is None:
        raise MissingPositionsError("OBJ output needs vertex positions")

    polylines = seam_polylines(mesh, seams) if seams is not None else []
    # Existing vertex ids survive with_open_seams, so polylines stay valid
    exported = mesh.with_open_seams()
    if exported is not mesh:
        logger.info("Writing %d seam sides with midpoint vertices", len(mesh.seam_sides))

    lines = [f"# meshtura {__version__}"]
    if exported.positions is not None:
        for x, y, z in exported.positions:
            lines.append(f"v {_format_float(x)} {_format_float(y)} {_format_float(z)}")
    for face in exported.faces:
        lines.append("f " + " ".join(str(v + 1) for v in face))
    for polyline in polylines:
        lines.append("l " + " ".join(str(v + 1) for v in polyline))

    return ("\n".join(lines) + "\n").encode("utf-8")
