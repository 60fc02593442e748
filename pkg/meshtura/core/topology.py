"""
Quantitative topology for Meshtura.

Counts components, boundary cycles, and watertight components; derives the
instigator partition, Betti numbers, Euler characteristic, and genus.
All arithmetic is exact integer arithmetic.
"""

import logging
from collections import deque
from typing import Deque, Dict, List, Optional, Tuple

from meshtura.core.errors import GenusUndefinedError, NonManifoldBoundaryError
from meshtura.core.mesh import Mesh, corner_wedges
from meshtura.core.models import (
    BettiNumbers,
    Dimension,
    ElementSet,
    InstigatorPartition,
    TopologyReport,
)
from meshtura.core.unionfind import DisjointSet
from meshtura.core.validator import MeshValidator

logger = logging.getLogger(__name__)


def euler_characteristic(mesh: Mesh) -> int:
    """chi = V - E + F."""
    return mesh.vertex_count - mesh.edge_count + mesh.face_count


def components(mesh: Mesh) -> Tuple[int, List[int]]:
    """
    Flood-fill vertex components over edge adjacency.

    Isolated vertices are components of their own.

    Returns:
        (component count, component label per vertex)
    """
    labels = [-1] * mesh.vertex_count
    count = 0

    for seed in range(mesh.vertex_count):
        if labels[seed] != -1:
            continue
        labels[seed] = count
        queue: Deque[int] = deque([seed])
        while queue:
            v = queue.popleft()
            for e in mesh.vertex_edges[v]:
                w = mesh.other_vertex(e, v)
                if labels[w] == -1:
                    labels[w] = count
                    queue.append(w)
        count += 1

    return count, labels


def _boundary_partners(mesh: Mesh) -> Dict[Tuple[int, int], int]:
    """
    Pair the boundary edges at each vertex.

    Boundary edges are paired inside the corner wedge they bound, so a
    bow-tie vertex links each boundary edge to the other edge of its own wedge.
    """
    partners: Dict[Tuple[int, int], int] = {}
    touched = sorted({v for e in mesh.boundary_edges() for v in mesh.edge_vertices(e)})

    for v in touched:
        for wedge in corner_wedges(mesh, v):
            ends = [e for e in wedge.open_edges if mesh.edges[e].is_boundary]
            if not ends:
                continue
            if len(ends) != 2:
                raise NonManifoldBoundaryError(
                    f"Vertex {v} has a face wedge with {len(ends)} boundary edges; "
                    "boundary edges cannot be paired into cycles"
                )
            a, b = ends
            partners[(v, a)] = b
            partners[(v, b)] = a

    return partners


def boundary_cycles(mesh: Mesh) -> Tuple[int, List[Tuple[int, ...]]]:
    """
    Trace every boundary edge into closed boundary cycles.

    Tracing starts at the lowest unvisited boundary edge and follows the
    wedge pairing at each vertex.

    Raises:
        NonManifoldBoundaryError: boundary edges cannot be paired

    Returns:
        (b, cycles as edge-id tuples in traversal order)
    """
    partners = _boundary_partners(mesh)
    visited = set()
    cycles: List[Tuple[int, ...]] = []

    for start in mesh.boundary_edges():
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        current = start
        vertex = mesh.edge_vertices(start)[1]

        while True:
            nxt = partners[(vertex, current)]
            if nxt == start:
                break
            cycle.append(nxt)
            visited.add(nxt)
            vertex = mesh.other_vertex(nxt, vertex)
            current = nxt

        cycles.append(tuple(cycle))

    return len(cycles), cycles


def spanning_forest(mesh: Mesh) -> ElementSet:
    """Spanning forest (one tree per component) chosen in edge-id order; V - s edges."""
    forest: DisjointSet[int] = DisjointSet()
    chosen = []
    for e, record in enumerate(mesh.edges):
        u, v = record.vertices
        if forest.union(u, v):
            chosen.append(e)
    return ElementSet.of(Dimension.EDGE, chosen)


def watertight_components(mesh: Mesh) -> int:
    """
    Count watertight face components (s_w).

    Faces are joined across edges with exactly two incident sides; a face
    component is watertight when none of its edges is a boundary edge.
    """
    joined: DisjointSet[int] = DisjointSet()
    for f in range(mesh.face_count):
        joined.add(f)

    open_faces = set()
    for record in mesh.edges:
        if record.face_degree == 2:
            joined.union(record.sides[0].face, record.sides[1].face)
        elif record.face_degree == 1:
            open_faces.add(record.sides[0].face)

    open_roots = {joined.find(f) for f in open_faces}
    return sum(1 for group in joined.groups() if joined.find(group[0]) not in open_roots)


def instigator_partition(mesh: Mesh) -> InstigatorPartition:
    """Split V, E, F into non-instigating and cycle-instigating counts."""
    v, e, f = mesh.counts
    s, _ = components(mesh)
    s_w = watertight_components(mesh)
    return InstigatorPartition(vn=0, vc=v, en=v - s, ec=e - v + s, fn=f - s_w, fc=s_w)


def betti_closed_form(mesh: Mesh) -> BettiNumbers:
    """
    Betti numbers from the instigator partition.

    b0 = VC - EN, b1 = EC - FN, b2 = FC. Defined for any mesh; the values
    describe a surface only when the mesh is manifold.
    """
    p = instigator_partition(mesh)
    return BettiNumbers(p.vc - p.en, p.ec - p.fn, p.fc)


def genus(mesh: Mesh, validator: Optional[MeshValidator] = None) -> int:
    """
    Solve the Euler-Poincare formula for the genus: g = s - (chi + b) / 2.

    Raises:
        GenusUndefinedError: the mesh is not manifold or not orientable, its
            boundary cannot be traced, or the formula gives no valid genus
    """
    validator = validator or MeshValidator()

    edge_manifold, edges = validator.check_edge_manifold(mesh)
    if not edge_manifold:
        raise GenusUndefinedError(f"Mesh is not edge-manifold (edges {edges[:10]})")

    links_connected, vertices = validator.check_vertex_links(mesh)
    if not links_connected:
        acceptable = {
            bv.vertex for bv in validator.classify_boundary_vertices(mesh) if bv.acceptable
        }
        pinched = [v for v in vertices if v not in acceptable]
        if pinched:
            raise GenusUndefinedError(f"Mesh has non-manifold vertices {pinched[:10]}")

    orientable, witness = validator.check_orientable(mesh)
    if not orientable:
        raise GenusUndefinedError(f"Mesh is not orientable (conflict at edge {witness})")

    try:
        b, _ = boundary_cycles(mesh)
    except NonManifoldBoundaryError as e:
        raise GenusUndefinedError(str(e)) from e

    s, _ = components(mesh)
    chi = euler_characteristic(mesh)
    if (chi + b) % 2:
        raise GenusUndefinedError(f"chi + b = {chi + b} is odd")
    g = s - (chi + b) // 2
    if g < 0:
        raise GenusUndefinedError(f"Formula gives negative genus {g}")
    return g


def analyze_topology(mesh: Mesh, validator: Optional[MeshValidator] = None) -> TopologyReport:
    """
    Compute the full quantitative topology of a mesh.

    Boundary cycles and genus are None when they cannot be determined.
    """
    validator = validator or MeshValidator()
    s, _ = components(mesh)

    try:
        b: Optional[int] = boundary_cycles(mesh)[0]
    except NonManifoldBoundaryError as e:
        logger.warning("Boundary cycles undefined: %s", e)
        b = None

    try:
        g: Optional[int] = genus(mesh, validator)
    except GenusUndefinedError as e:
        logger.info("Genus undefined: %s", e)
        g = None

    partition = instigator_partition(mesh)
    report = TopologyReport(
        vertex_count=mesh.vertex_count,
        edge_count=mesh.edge_count,
        face_count=mesh.face_count,
        components=s,
        boundary_cycles=b,
        euler_characteristic=euler_characteristic(mesh),
        genus=g,
        watertight_components=partition.fc,
        partition=partition,
        betti=BettiNumbers(partition.vc - partition.en, partition.ec - partition.fn, partition.fc),
    )
    logger.debug("Topology: %s", report)
    return report
