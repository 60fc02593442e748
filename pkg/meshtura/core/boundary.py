"""
Boundary and coboundary operators on mesh element sets.

Sets are homogeneous: all members are vertices, all edges, or all faces.
"""

from collections import Counter
from typing import Dict, List

from meshtura.core.errors import DimensionMismatchError
from meshtura.core.mesh import Mesh
from meshtura.core.models import Dimension, ElementRef, ElementSet
from meshtura.core.unionfind import DisjointSet


def _check_ref(ref: ElementRef, mesh: Mesh) -> None:
    if ref.dimension == Dimension.VERTEX:
        mesh.check_vertex(ref.id)
    elif ref.dimension == Dimension.EDGE:
        mesh.check_edge(ref.id)
    else:
        mesh.check_face(ref.id)


def boundary(ref: ElementRef, mesh: Mesh) -> ElementSet:
    """
    Boundary of a single element.

    A face is bounded by its edges, an edge by its two vertices, and a
    vertex has an empty boundary (returned as an empty vertex set).
    """
    _check_ref(ref, mesh)
    if ref.dimension == Dimension.FACE:
        return ElementSet.of(Dimension.EDGE, mesh.face_edges[ref.id])
    if ref.dimension == Dimension.EDGE:
        return ElementSet.of(Dimension.VERTEX, mesh.edge_vertices(ref.id))
    return ElementSet.empty(Dimension.VERTEX)


def coboundary(members: ElementSet, eps: ElementRef, mesh: Mesh) -> ElementSet:
    """
    Members of a set whose boundary contains `eps`.

    Raises:
        DimensionMismatchError: eps is not one dimension below the set
    """
    if eps.dimension != members.dimension - 1:
        raise DimensionMismatchError(
            f"Coboundary of a dimension-{int(eps.dimension)} element inside a "
            f"dimension-{int(members.dimension)} set"
        )
    _check_ref(eps, mesh)
    return ElementSet.of(
        members.dimension,
        (x for x in members if eps.id in boundary(ElementRef(members.dimension, x), mesh)),
    )


def _incidence_counts(members: ElementSet, mesh: Mesh) -> Counter:
    counts: Counter = Counter()
    for x in members:
        counts.update(boundary(ElementRef(members.dimension, x), mesh).members)
    return counts


def boundary_of_set(members: ElementSet, mesh: Mesh) -> ElementSet:
    """Elements incident on exactly one member of the set."""
    if members.dimension == Dimension.VERTEX:
        return ElementSet.empty(Dimension.VERTEX)
    counts = _incidence_counts(members, mesh)
    return ElementSet.of(
        Dimension(members.dimension - 1), (eps for eps, n in counts.items() if n == 1)
    )


def is_cycle(members: ElementSet, mesh: Mesh) -> bool:
    """True when the set has an empty boundary; vertex sets always are."""
    if members.dimension == Dimension.VERTEX:
        return True
    return boundary_of_set(members, mesh).is_empty


def is_simple_cycle(members: ElementSet, mesh: Mesh) -> bool:
    """
    True when the set is connected and every element of its members'
    boundaries is incident on exactly two members.

    Vertex sets and empty sets are never simple cycles.
    """
    if members.dimension == Dimension.VERTEX or members.is_empty:
        return False

    incident: Dict[int, List[int]] = {}
    for x in members:
        for eps in boundary(ElementRef(members.dimension, x), mesh):
            incident.setdefault(eps, []).append(x)

    if any(len(xs) != 2 for xs in incident.values()):
        return False

    joined: DisjointSet[int] = DisjointSet()
    for x in members:
        joined.add(x)
    for a, b in incident.values():
        joined.union(a, b)
    return len(joined.groups()) == 1
