"""
Tree-cotree cut graph construction.

A shortest-path tree spans the vertices, a co-tree spans the faces through
edges the tree does not use, and every remaining edge closes one generator
loop through the tree. The union of the loops is the cut graph: cutting a
closed surface along it leaves a topological disc.
"""

import heapq
import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Sequence, Tuple

from meshtura.core.errors import (
    InvalidRootError,
    MeshNotClosedError,
    MeshNotManifoldError,
    MissingPositionsError,
    TreeEdgeError,
)
from meshtura.core.mesh import Mesh
from meshtura.core.models import CutGraphSummary, Dimension, EdgeWeighting, ElementSet
from meshtura.core.topology import components
from meshtura.core.validator import MeshValidator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexTree:
    """Shortest-path tree over the vertices of the root's component."""

    root: int
    parent_edge: Tuple[Optional[int], ...]
    parent: Tuple[Optional[int], ...]
    distance: Tuple[Optional[float], ...]  # None for vertices outside the component

    @property
    def edges(self) -> ElementSet:
        return ElementSet.of(Dimension.EDGE, (e for e in self.parent_edge if e is not None))

    def reaches(self, vertex: int) -> bool:
        return self.distance[vertex] is not None

    def path_to_root(self, vertex: int) -> Tuple[List[int], List[int]]:
        """(vertices from `vertex` up to the root, tree edges along the way)."""
        vertices = [vertex]
        edges = []
        while vertex != self.root:
            edges.append(self.parent_edge[vertex])
            vertex = self.parent[vertex]
            vertices.append(vertex)
        return vertices, edges


@dataclass(frozen=True)
class FaceCoTree:
    """Spanning tree of the dual graph that avoids the vertex tree's edges."""

    root: int
    parent_edge: Dict[int, Optional[int]]  # face -> edge shared with parent face

    @property
    def faces(self) -> Tuple[int, ...]:
        return tuple(sorted(self.parent_edge))

    @property
    def edges(self) -> ElementSet:
        return ElementSet.of(Dimension.EDGE, (e for e in self.parent_edge.values() if e is not None))


@dataclass(frozen=True)
class EdgeLoop:
    """
    Generator loop closed by one instigator edge.

    `edges` and `vertices` describe the simple cycle in traversal order,
    starting and ending at the lowest common ancestor of the instigator's
    endpoints. `stem` is the tree path from that ancestor to the root.
    """

    instigator: int
    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]
    stem: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def cycle(self) -> ElementSet:
        return ElementSet.of(Dimension.EDGE, self.edges)

    @property
    def lasso(self) -> ElementSet:
        """Cycle plus stem."""
        return ElementSet.of(Dimension.EDGE, self.edges + self.stem)


@dataclass(frozen=True)
class CutGraph:
    """Generator loops of one component and their union B."""

    root: int
    tree: VertexTree
    cotree: FaceCoTree
    loops: Tuple[EdgeLoop, ...]
    edges: ElementSet  # B
    puncture_edge: Optional[int] = None

    def cut_set(self) -> ElementSet:
        """Edges to cut: B, or the puncture edge on a sphere."""
        if self.edges.is_empty and self.puncture_edge is not None:
            return ElementSet.of(Dimension.EDGE, [self.puncture_edge])
        return self.edges

    def summary(self) -> CutGraphSummary:
        return CutGraphSummary(
            root=self.root,
            loops=len(self.loops),
            loop_lengths=tuple(len(loop) for loop in self.loops),
            cut_edge_count=len(self.edges),
            puncture_edge=self.puncture_edge,
        )


def _edge_weights(mesh: Mesh, weighting: EdgeWeighting) -> Sequence[float]:
    if weighting == EdgeWeighting.AUTO:
        weighting = EdgeWeighting.EUCLIDEAN if mesh.has_positions else EdgeWeighting.HOPS
    if weighting == EdgeWeighting.EUCLIDEAN:
        if not mesh.has_positions:
            raise MissingPositionsError("Euclidean edge weights need vertex positions")
        return [float(w) for w in mesh.edge_lengths()]
    return [1.0] * mesh.edge_count


def shortest_path_tree(
    mesh: Mesh, root: int, weighting: EdgeWeighting = EdgeWeighting.AUTO
) -> VertexTree:
    """
    Dijkstra shortest-path tree from `root`.

    The frontier pops by (distance, vertex id); equal-distance parents are
    resolved in favour of the lowest edge id.

    Args:
        mesh: Mesh to span
        root: Root vertex
        weighting: Edge weights (Euclidean length or hop count)

    Returns:
        VertexTree spanning the root's component
    """
    mesh.check_vertex(root)
    weights = _edge_weights(mesh, weighting)

    distance: List[Optional[float]] = [None] * mesh.vertex_count
    parent_edge: List[Optional[int]] = [None] * mesh.vertex_count
    parent: List[Optional[int]] = [None] * mesh.vertex_count
    done = [False] * mesh.vertex_count

    distance[root] = 0.0
    frontier: List[Tuple[float, int]] = [(0.0, root)]

    while frontier:
        d, v = heapq.heappop(frontier)
        if done[v]:
            continue
        done[v] = True

        for e in mesh.vertex_edges[v]:
            w = mesh.other_vertex(e, v)
            if done[w]:
                continue
            candidate = d + weights[e]
            current = distance[w]
            if (
                current is None
                or candidate < current
                or (candidate == current and e < parent_edge[w])
            ):
                distance[w] = candidate
                parent_edge[w] = e
                parent[w] = v
                heapq.heappush(frontier, (candidate, w))

    tree = VertexTree(
        root=root,
        parent_edge=tuple(parent_edge),
        parent=tuple(parent),
        distance=tuple(distance),
    )
    logger.debug("Shortest-path tree from %d with %d edges", root, len(tree.edges))
    return tree


def cotree(mesh: Mesh, tree: VertexTree, start_face: int) -> FaceCoTree:
    """
    Grow the co-tree breadth-first from `start_face`.

    A face is reached through an edge only when that edge is not in the
    vertex tree. Faces are visited FIFO, neighbours in side order.

    Raises:
        MeshNotClosedError: the mesh has boundary edges
        MeshNotManifoldError: some edge has more than two incident faces
    """
    mesh.check_face(start_face)
    if not mesh.is_closed:
        raise MeshNotClosedError("Co-tree construction needs a closed mesh")
    edge_manifold, offenders = MeshValidator().check_edge_manifold(mesh)
    if not edge_manifold:
        raise MeshNotManifoldError(f"Mesh is not edge-manifold (edges {offenders[:10]})")

    tree_edges = tree.edges
    parent_edge: Dict[int, Optional[int]] = {start_face: None}
    queue: Deque[int] = deque([start_face])

    while queue:
        f = queue.popleft()
        for e in mesh.face_edges[f]:
            if e in tree_edges:
                continue
            for other in mesh.edges[e].sides:
                if other.face not in parent_edge:
                    parent_edge[other.face] = e
                    queue.append(other.face)

    return FaceCoTree(root=start_face, parent_edge=parent_edge)


def _component_edges(mesh: Mesh, faces: Sequence[int]) -> ElementSet:
    return ElementSet.of(Dimension.EDGE, (e for f in faces for e in mesh.face_edges[f]))


def instigator_edges(mesh: Mesh, tree: VertexTree, ct: FaceCoTree) -> ElementSet:
    """Edges of the component in neither the tree nor the co-tree."""
    remaining = _component_edges(mesh, ct.faces).members - tree.edges.members - ct.edges.members
    return ElementSet(Dimension.EDGE, frozenset(remaining))


def trace_loop(edge: int, tree: VertexTree, mesh: Mesh) -> EdgeLoop:
    """
    Close the loop of a non-tree edge through the tree.

    The loop is the edge plus the tree paths from its endpoints up to their
    lowest common ancestor; the stem continues from there to the root.

    Raises:
        TreeEdgeError: the edge belongs to the tree
        InvalidRootError: the edge lies outside the tree's component
    """
    mesh.check_edge(edge)
    if edge in tree.edges:
        raise TreeEdgeError(f"Edge {edge} is a tree edge and closes no loop")

    u, v = mesh.edge_vertices(edge)
    if not (tree.reaches(u) and tree.reaches(v)):
        raise InvalidRootError(f"Edge {edge} is not reachable from root {tree.root}")

    up_vertices, up_edges = tree.path_to_root(u)
    ancestors = {x: i for i, x in enumerate(up_vertices)}

    down_vertices = [v]
    down_edges: List[int] = []
    while down_vertices[-1] not in ancestors:
        x = down_vertices[-1]
        down_edges.append(tree.parent_edge[x])
        down_vertices.append(tree.parent[x])

    lca = down_vertices[-1]
    cut = ancestors[lca]
    # lca -> ... -> u, instigator, v -> ... -> lca
    vertices = tuple(reversed(up_vertices[: cut + 1])) + tuple(down_vertices[:-1])
    edges = tuple(reversed(up_edges[:cut])) + (edge,) + tuple(down_edges)
    stem = tuple(up_edges[cut:])

    return EdgeLoop(instigator=edge, edges=edges, vertices=vertices, stem=stem)


def build_cut_graph(
    mesh: Mesh, root: int = 0, weighting: EdgeWeighting = EdgeWeighting.AUTO
) -> CutGraph:
    """
    Build the cut graph of the component containing `root`.

    Args:
        mesh: Closed edge-manifold mesh
        root: Base vertex every loop is tied to
        weighting: Edge weights for the shortest-path tree

    Raises:
        InvalidRootError: the root has no incident face
        MeshNotClosedError / MeshNotManifoldError: from co-tree construction

    Returns:
        CutGraph; on a sphere the loops are empty and puncture_edge is set
    """
    mesh.check_vertex(root)
    if not mesh.vertex_faces[root]:
        raise InvalidRootError(f"Root vertex {root} has no incident face")

    validator = MeshValidator()
    if validator.check_edge_manifold(mesh)[0] and not validator.check_orientable(mesh)[0]:
        logger.warning("Cut graph of a non-orientable mesh will not cut it into a disc")

    tree = shortest_path_tree(mesh, root, weighting)
    ct = cotree(mesh, tree, min(mesh.vertex_faces[root]))
    loops = tuple(trace_loop(e, tree, mesh) for e in instigator_edges(mesh, tree, ct))

    b_edges = ElementSet.empty(Dimension.EDGE)
    for loop in loops:
        b_edges = b_edges.union(loop.lasso)

    puncture = None
    if not loops:
        puncture = min(_component_edges(mesh, ct.faces))

    logger.info(
        "Cut graph from root %d: %d loops, %d cut edges", root, len(loops), len(b_edges)
    )
    return CutGraph(
        root=root, tree=tree, cotree=ct, loops=loops, edges=b_edges, puncture_edge=puncture
    )


def component_roots(mesh: Mesh) -> List[int]:
    """Lowest vertex with an incident face in each face-carrying component."""
    _, labels = components(mesh)
    roots: Dict[int, int] = {}
    for v in range(mesh.vertex_count):
        if mesh.vertex_faces[v] and labels[v] not in roots:
            roots[labels[v]] = v
    return sorted(roots.values())


def cut_graph_roots(mesh: Mesh, root: Optional[int] = None) -> List[int]:
    """
    Root vertex for each face-carrying component.

    Args:
        mesh: Mesh to root
        root: Optional vertex that replaces the default root of its component

    Raises:
        IndexOutOfRangeError: root is not a vertex of the mesh
        InvalidRootError: root has no incident face
    """
    roots = component_roots(mesh)
    if root is None:
        return roots

    mesh.check_vertex(root)
    if not mesh.vertex_faces[root]:
        raise InvalidRootError(f"Root vertex {root} has no incident face")
    _, labels = components(mesh)
    return [root if labels[r] == labels[root] else r for r in roots]


def build_cut_graphs(
    mesh: Mesh,
    weighting: EdgeWeighting = EdgeWeighting.AUTO,
    root: Optional[int] = None,
) -> List[CutGraph]:
    """One cut graph per component, rooted as `cut_graph_roots` decides."""
    return [build_cut_graph(mesh, r, weighting) for r in cut_graph_roots(mesh, root)]
