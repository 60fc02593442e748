"""
Filtrations and the incremental Betti number algorithm.

A filtration orders every vertex, edge, and face so that each element comes
after all elements of its boundary. Adding elements one at a time, each
element either instigates a new cycle or destroys one of lower dimension.
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

import numpy as np

from meshtura.core.errors import InvalidFiltrationError, NotEdgeManifoldError
from meshtura.core.mesh import Mesh
from meshtura.core.models import BettiNumbers, Dimension, ElementRef
from meshtura.core.unionfind import DisjointSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Filtration:
    """Ordered list of every mesh element."""

    elements: Tuple[ElementRef, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def positions(self) -> Dict[ElementRef, int]:
        """Index of each element in the ordering."""
        return {ref: i for i, ref in enumerate(self.elements)}


def _requirements(mesh: Mesh, ref: ElementRef) -> Tuple[ElementRef, ...]:
    """Elements that must precede `ref`."""
    if ref.dimension == Dimension.EDGE:
        return tuple(ElementRef.vertex(v) for v in mesh.edge_vertices(ref.id))
    if ref.dimension == Dimension.FACE:
        return tuple(ElementRef.edge(e) for e in sorted(set(mesh.face_edges[ref.id])))
    return ()


def make_filtration(mesh: Mesh, seed: int = 0) -> Filtration:
    """
    Draw a random valid filtration.

    Elements become ready once their boundary has been emitted; among ready
    elements the one with the smallest random priority goes next. The same
    seed always yields the same ordering.

    Args:
        mesh: Mesh to order
        seed: Seed for numpy.random.default_rng

    Returns:
        Filtration covering every element exactly once
    """
    rng = np.random.default_rng(seed)
    v_count, e_count, f_count = mesh.counts
    priorities = rng.random(v_count + e_count + f_count)
    offsets = {Dimension.VERTEX: 0, Dimension.EDGE: v_count, Dimension.FACE: v_count + e_count}

    def entry(ref: ElementRef) -> Tuple[float, int, int]:
        return (float(priorities[offsets[ref.dimension] + ref.id]), int(ref.dimension), ref.id)

    waiting: Dict[ElementRef, int] = {}
    for e in range(e_count):
        waiting[ElementRef.edge(e)] = 2
    for f in range(f_count):
        waiting[ElementRef.face(f)] = len(set(mesh.face_edges[f]))

    ready = [entry(ElementRef.vertex(v)) for v in range(v_count)]
    heapq.heapify(ready)
    order: List[ElementRef] = []

    while ready:
        _, dim, index = heapq.heappop(ready)
        ref = ElementRef(Dimension(dim), index)
        order.append(ref)

        if ref.dimension == Dimension.VERTEX:
            dependants = [ElementRef.edge(e) for e in mesh.vertex_edges[index]]
        elif ref.dimension == Dimension.EDGE:
            dependants = [ElementRef.face(f) for f in mesh.edges[index].faces]
        else:
            dependants = []

        for dependant in dependants:
            waiting[dependant] -= 1
            if waiting[dependant] == 0:
                heapq.heappush(ready, entry(dependant))

    logger.debug("Filtration of %d elements (seed %d)", len(order), seed)
    return Filtration(tuple(order))


def validate_filtration(mesh: Mesh, filtration: Filtration) -> None:
    """
    Check that a filtration covers the mesh and respects boundary precedence.

    Raises:
        InvalidFiltrationError: an element is missing, repeated, out of range,
            or precedes part of its boundary
    """
    v_count, e_count, f_count = mesh.counts
    limits = {Dimension.VERTEX: v_count, Dimension.EDGE: e_count, Dimension.FACE: f_count}
    expected = v_count + e_count + f_count
    if len(filtration) != expected:
        raise InvalidFiltrationError(
            f"Filtration has {len(filtration)} elements; mesh has {expected}"
        )

    seen: Set[ElementRef] = set()
    for i, ref in enumerate(filtration.elements):
        if not 0 <= ref.id < limits[ref.dimension]:
            raise InvalidFiltrationError(f"Position {i}: {ref} is out of range")
        if ref in seen:
            raise InvalidFiltrationError(f"Position {i}: {ref} appears twice")
        for required in _requirements(mesh, ref):
            if required not in seen:
                raise InvalidFiltrationError(
                    f"Position {i}: {ref} appears before its boundary element {required}"
                )
        seen.add(ref)


def betti_incremental(mesh: Mesh, filtration: Filtration) -> BettiNumbers:
    """
    Compute Betti numbers by adding elements in filtration order.

    A vertex always adds a component. An edge closes a cycle when its
    endpoints are already connected, otherwise it merges two components.
    A face encloses a shell when it closes its face component, otherwise it
    fills an edge cycle.

    Raises:
        InvalidFiltrationError: the ordering is not a valid filtration
        NotEdgeManifoldError: some edge has more than two incident faces
    """
    validate_filtration(mesh, filtration)
    offenders = [e for e, record in enumerate(mesh.edges) if record.face_degree > 2]
    if offenders:
        raise NotEdgeManifoldError(
            f"Incremental Betti numbers need an edge-manifold mesh; offending edges {offenders[:10]}"
        )

    b0 = b1 = b2 = 0
    vertices: DisjointSet[int] = DisjointSet()
    faces: DisjointSet[int] = DisjointSet()
    open_edges: Dict[int, int] = {}  # face component root -> edges with one side so far
    side_counts = [0] * mesh.edge_count
    first_face = [-1] * mesh.edge_count

    for ref in filtration.elements:
        if ref.dimension == Dimension.VERTEX:
            vertices.add(ref.id)
            b0 += 1

        elif ref.dimension == Dimension.EDGE:
            u, v = mesh.edge_vertices(ref.id)
            if vertices.union(u, v):
                b0 -= 1
            else:
                b1 += 1

        else:
            f = ref.id
            faces.add(f)
            open_edges[f] = 0
            for e in mesh.face_edges[f]:
                if side_counts[e] == 0:
                    first_face[e] = f
                    open_edges[faces.find(f)] += 1
                else:
                    root_a = faces.find(f)
                    root_b = faces.find(first_face[e])
                    merged = open_edges.pop(root_a) + (
                        open_edges.pop(root_b) if root_b != root_a else 0
                    )
                    faces.union(root_a, root_b)
                    open_edges[faces.find(f)] = merged - 1
                side_counts[e] += 1

            if open_edges[faces.find(f)] == 0:
                b2 += 1
            else:
                b1 -= 1

    return BettiNumbers(b0, b1, b2)
