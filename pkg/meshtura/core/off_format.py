"""
Object File Format (OFF) reader and writer.
"""

from typing import Iterator, List, Tuple

from meshtura.core.errors import MeshParseError, MissingPositionsError, decode_lines
from meshtura.core.mesh import Mesh, build_mesh

# ST texture coordinates, C colours, N normals
_HEADERS = frozenset(f"{st}{c}{n}OFF" for st in ("", "ST") for c in ("", "C") for n in ("", "N"))


def _statements(data: bytes) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line number, tokens) for every non-blank, non-comment line."""
    for line_number, raw in decode_lines(data):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield line_number, tokens


def _ints(tokens: List[str], line_number: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as e:
        raise MeshParseError(f"Expected integers, got {' '.join(tokens)!r}", line_number) from e


def parse_off(data: bytes) -> Mesh:
    """
    Parse OFF text into a mesh.

    The header may carry the counts on the same line (`OFF 4 4 6`) and may be
    any of the COFF, NOFF, STOFF variants; the extra vertex fields are skipped.
    Per-vertex and per-face colours after the required fields are ignored.

    Raises:
        MeshParseError: missing header, bad counts, or truncated file
        IndexOutOfRangeError: a face references an undefined vertex
    """
    statements = _statements(data)

    def next_statement(what: str) -> Tuple[int, List[str]]:
        try:
            return next(statements)
        except StopIteration:
            raise MeshParseError(f"Unexpected end of file while reading {what}") from None

    line_number, tokens = next_statement("header")
    if tokens[0] not in _HEADERS:
        raise MeshParseError(f"Expected OFF header, got {tokens[0]!r}", line_number)

    counts = tokens[1:]
    if not counts:
        line_number, counts = next_statement("counts")
    if len(counts) < 2:
        raise MeshParseError("Counts line needs vertex and face counts", line_number)
    vertex_count, face_count = _ints(counts[:2], line_number)
    if vertex_count < 0 or face_count < 0:
        raise MeshParseError("Negative element count", line_number)

    positions = []
    for _ in range(vertex_count):
        line_number, tokens = next_statement("vertices")
        if len(tokens) < 3:
            raise MeshParseError("Vertex needs three coordinates", line_number)
        try:
            positions.append([float(t) for t in tokens[:3]])
        except ValueError as e:
            raise MeshParseError(f"Invalid coordinate in {' '.join(tokens)!r}", line_number) from e

    faces = []
    for _ in range(face_count):
        line_number, tokens = next_statement("faces")
        values = _ints(tokens[:1], line_number)
        size = values[0]
        if len(tokens) < size + 1:
            raise MeshParseError(f"Face declares {size} vertices but lists fewer", line_number)
        faces.append(_ints(tokens[1 : size + 1], line_number))

    return build_mesh(vertex_count, faces, positions)


def write_off(mesh: Mesh) -> bytes:
    """
    Serialize a mesh as OFF.

    Seam sides are written through `mesh.with_open_seams()`, as for OBJ.

    Raises:
        MissingPositionsError: the mesh has vertices but no positions
    """
    if mesh.vertex_count and mesh.positions is None:
        raise MissingPositionsError("OFF output needs vertex positions")
    mesh = mesh.with_open_seams()

    lines = ["OFF", f"{mesh.vertex_count} {mesh.face_count} {mesh.edge_count}"]
    if mesh.positions is not None:
        for x, y, z in mesh.positions:
            lines.append(f"{float(x)!r} {float(y)!r} {float(z)!r}")
    for face in mesh.faces:
        lines.append(f"{len(face)} " + " ".join(str(v) for v in face))
    return ("\n".join(lines) + "\n").encode("utf-8")
