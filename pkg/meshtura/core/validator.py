"""
Deterministic validation system for Meshtura.

Checks manifoldness, orientability, watertightness, simple-cycle faces,
and boundary bow-tie vertices. Validation never modifies the mesh.
"""

import logging
from collections import deque
from typing import Deque, List, Optional, Tuple

from meshtura.core.boundary import boundary, is_simple_cycle
from meshtura.core.errors import NotEdgeManifoldError
from meshtura.core.mesh import Mesh, corner_wedges
from meshtura.core.models import (
    BoundaryVertex,
    ElementRef,
    ValidationIssue,
    ValidationReport,
    ValidationStatus,
)
from meshtura.core.unionfind import DisjointSet

logger = logging.getLogger(__name__)


class MeshValidator:
    """Validates the qualitative topology of a mesh."""

    def check_edge_manifold(self, mesh: Mesh) -> Tuple[bool, List[int]]:
        """
        Check that every edge has one or two incident faces.

        Returns:
            (passed, offending edge ids in ascending order)
        """
        offenders = [e for e, edge in enumerate(mesh.edges) if edge.face_degree not in (1, 2)]
        return not offenders, offenders

    def check_vertex_links(self, mesh: Mesh) -> Tuple[bool, List[int]]:
        """
        Check that the edges around each vertex form a single class under
        the relation "share an incident face", transitively closed.

        Returns:
            (passed, offending vertex ids in ascending order)
        """
        offenders = []
        for v in range(mesh.vertex_count):
            incident = mesh.vertex_edges[v]
            if len(incident) <= 1:
                continue

            classes: DisjointSet[int] = DisjointSet()
            for e in incident:
                classes.add(e)
            for f in mesh.vertex_faces[v]:
                at_vertex = [e for e in mesh.face_edges[f] if v in mesh.edge_vertices(e)]
                for e in at_vertex[1:]:
                    classes.union(at_vertex[0], e)

            if len(classes.groups()) > 1:
                offenders.append(v)
        return not offenders, offenders

    def check_orientable(self, mesh: Mesh) -> Tuple[bool, Optional[int]]:
        """
        Check whether consistent face orientations can be assigned.

        Raises:
            NotEdgeManifoldError: some edge has more than two incident faces

        Returns:
            (orientable, first conflicting edge or None)
        """
        edge_manifold, offenders = self.check_edge_manifold(mesh)
        if not edge_manifold:
            raise NotEdgeManifoldError(
                f"Orientability needs an edge-manifold mesh; offending edges {offenders[:10]}"
            )
        return self._propagate_orientation(mesh)

    def check_watertight(self, mesh: Mesh) -> bool:
        """True when no edge has exactly one incident face."""
        return mesh.is_closed

    def classify_boundary_vertices(self, mesh: Mesh) -> List[BoundaryVertex]:
        """
        Classify vertices with more than two incident boundary edges.

        A bow-tie vertex is acceptable when its faces come in wedges that each
        contribute exactly two boundary edges, i.e. closing the holes would
        make it manifold. Wedges with multiple incidence are unacceptable.
        On non-edge-manifold meshes the result is diagnostic only.
        """
        classified = []
        for v in range(mesh.vertex_count):
            boundary_count = sum(1 for e in mesh.vertex_edges[v] if mesh.edges[e].is_boundary)
            if boundary_count <= 2:
                continue

            wedges = corner_wedges(mesh, v)
            pairs = []
            acceptable = boundary_count % 2 == 0
            for wedge in wedges:
                wedge_boundary = tuple(
                    e for e in wedge.open_edges if mesh.edges[e].is_boundary
                )
                pairs.append(wedge_boundary)
                if len(wedge_boundary) != 2 or wedge.multiple_incidence:
                    acceptable = False
                if len(wedge_boundary) != len(wedge.open_edges):
                    # A non-manifold edge ends the wedge
                    acceptable = False

            classified.append(
                BoundaryVertex(
                    vertex=v,
                    boundary_edge_count=boundary_count,
                    acceptable=acceptable,
                    wedge_pairs=tuple(pairs),
                )
            )
        return classified

    def validate(self, mesh: Mesh) -> ValidationReport:
        """
        Run every check and aggregate the results.

        Args:
            mesh: Mesh to validate

        Returns:
            ValidationReport with ascending offender lists
        """
        report = ValidationReport()

        self._validate_edge_manifold(mesh, report)
        self._validate_vertex_links(mesh, report)
        self._validate_simple_faces(mesh, report)
        self._validate_orientation(mesh, report)
        self._validate_watertight(mesh, report)
        self._validate_boundary_vertices(mesh, report)
        self._validate_isolated_vertices(mesh, report)

        logger.debug(
            "Validated mesh V=%d E=%d F=%d: %s",
            *mesh.counts,
            report.overall_status.value,
        )
        return report

    def _validate_edge_manifold(self, mesh: Mesh, report: ValidationReport) -> None:
        passed, offenders = self.check_edge_manifold(mesh)
        report.edge_manifold = passed
        report.non_manifold_edges = offenders
        for e in offenders:
            report.add_issue(
                ValidationIssue(
                    severity=ValidationStatus.FAILED,
                    message=f"Edge {e} has {mesh.face_degree(e)} incident faces",
                    check="edge_manifold",
                    element=ElementRef.edge(e),
                    details={"face_degree": mesh.face_degree(e)},
                )
            )

    def _validate_vertex_links(self, mesh: Mesh, report: ValidationReport) -> None:
        passed, offenders = self.check_vertex_links(mesh)
        report.vertex_links_connected = passed
        report.non_manifold_vertices = offenders
        for v in offenders:
            report.add_issue(
                ValidationIssue(
                    severity=ValidationStatus.FAILED,
                    message=f"Faces around vertex {v} form more than one component",
                    check="vertex_links",
                    element=ElementRef.vertex(v),
                )
            )

    def _validate_simple_faces(self, mesh: Mesh, report: ValidationReport) -> None:
        offenders = [
            f
            for f in range(mesh.face_count)
            if not is_simple_cycle(boundary(ElementRef.face(f), mesh), mesh)
        ]
        report.faces_simple = not offenders
        report.non_simple_faces = offenders
        for f in offenders:
            report.add_issue(
                ValidationIssue(
                    severity=ValidationStatus.WARNING,
                    message=f"Face {f} has multiple incidence (boundary is not a simple cycle)",
                    check="simple_faces",
                    element=ElementRef.face(f),
                )
            )

    def _validate_orientation(self, mesh: Mesh, report: ValidationReport) -> None:
        # Best effort on non-manifold input: only two-sided edges constrain orientation
        orientable, witness = self._propagate_orientation(mesh)
        report.orientable = orientable
        report.orientation_witness = witness
        report.orientation_reliable = report.edge_manifold

        if not report.edge_manifold:
            logger.warning("Orientability computed on a non-edge-manifold mesh is unreliable")
            report.add_issue(
                ValidationIssue(
                    severity=ValidationStatus.WARNING,
                    message="Orientability ignores edges with more than two faces",
                    check="orientable",
                )
            )
        if not orientable:
            report.add_issue(
                ValidationIssue(
                    severity=ValidationStatus.FAILED,
                    message=f"Edge {witness} has the same direction in both incident faces",
                    check="orientable",
                    element=ElementRef.edge(witness) if witness is not None else None,
                )
            )

    def _validate_watertight(self, mesh: Mesh, report: ValidationReport) -> None:
        # Open meshes are legitimate; watertightness is reported, not enforced
        report.watertight = self.check_watertight(mesh)

    def _validate_boundary_vertices(self, mesh: Mesh, report: ValidationReport) -> None:
        report.boundary_bowtie_vertices = self.classify_boundary_vertices(mesh)
        for bowtie in report.boundary_bowtie_vertices:
            report.add_issue(
                ValidationIssue(
                    severity=(
                        ValidationStatus.WARNING
                        if bowtie.acceptable
                        else ValidationStatus.FAILED
                    ),
                    message=(
                        f"Vertex {bowtie.vertex} has {bowtie.boundary_edge_count} "
                        f"boundary edges ({'acceptable' if bowtie.acceptable else 'unacceptable'})"
                    ),
                    check="boundary_vertices",
                    element=ElementRef.vertex(bowtie.vertex),
                )
            )

    def _validate_isolated_vertices(self, mesh: Mesh, report: ValidationReport) -> None:
        report.isolated_vertices = [
            v for v in range(mesh.vertex_count) if not mesh.vertex_faces[v]
        ]
        if report.isolated_vertices:
            logger.warning("Mesh has %d isolated vertices", len(report.isolated_vertices))
            report.add_issue(
                ValidationIssue(
                    severity=ValidationStatus.WARNING,
                    message=f"{len(report.isolated_vertices)} isolated vertices",
                    check="isolated_vertices",
                    details={"vertices": report.isolated_vertices[:20]},
                )
            )

    @staticmethod
    def _propagate_orientation(mesh: Mesh) -> Tuple[bool, Optional[int]]:
        """
        Breadth-first orientation propagation over face adjacency.

        Starts at the lowest unvisited face of each component and visits
        neighbours in side order; only edges with exactly two incident sides
        constrain the orientation. Returns the first conflicting edge.
        """
        flips: List[Optional[bool]] = [None] * mesh.face_count

        for start in range(mesh.face_count):
            if flips[start] is not None:
                continue
            flips[start] = False
            queue: Deque[int] = deque([start])

            while queue:
                f = queue.popleft()
                for i, e in enumerate(mesh.face_edges[f]):
                    record = mesh.edges[e]
                    if record.face_degree != 2:
                        continue
                    mine = mesh.side_vertices(f, i)
                    if flips[f]:
                        mine = (mine[1], mine[0])

                    for side in record.sides:
                        if side == (f, i):
                            continue
                        theirs = mesh.side_vertices(side.face, side.side)
                        # Consistent when the shared edge runs opposite ways
                        needs_flip = theirs == mine
                        if flips[side.face] is None:
                            flips[side.face] = needs_flip
                            queue.append(side.face)
                        elif flips[side.face] != needs_flip:
                            return False, e

        return True, None
