"""
Tests for components, boundary cycles, genus, and Betti numbers.

Run with: pytest
"""

import numpy as np
import pytest

from meshtura.core.errors import (
    GenusUndefinedError,
    InvalidFiltrationError,
    NonManifoldBoundaryError,
    NotEdgeManifoldError,
)
from meshtura.core.filtration import (
    Filtration,
    betti_incremental,
    make_filtration,
    validate_filtration,
)
from meshtura.core.mesh import build_mesh
from meshtura.core.models import Dimension, ElementRef
from meshtura.core.topology import (
    analyze_topology,
    betti_closed_form,
    boundary_cycles,
    components,
    euler_characteristic,
    genus,
    instigator_partition,
    spanning_forest,
    watertight_components,
)
from meshtura.generators import generate

# (spec, partition VN..FC, (s, g, b), betti)
GOLDEN_ROWS = [
    ("hexagon", (0, 6, 5, 1, 1, 0), (1, 0, 1), (1, 0, 0)),
    ("annulus", (0, 12, 11, 7, 6, 0), (1, 0, 2), (1, 1, 0)),
    ("tetrahedron", (0, 4, 3, 3, 3, 1), (1, 0, 0), (1, 0, 1)),
    ("torus_grid:3,3", (0, 9, 8, 10, 8, 1), (1, 1, 0), (1, 2, 1)),
]


def disjoint_union(first, second):
    """Place two meshes side by side in one vertex table."""
    offset = first.vertex_count
    faces = list(first.faces) + [tuple(v + offset for v in f) for f in second.faces]
    points = np.vstack([first.positions, second.positions + np.array([10.0, 0.0, 0.0])])
    return build_mesh(offset + second.vertex_count, faces, points)


class TestGoldenRows:
    """Test the reference meshes against their known topology."""

    @pytest.mark.parametrize("spec,partition,surface,betti", GOLDEN_ROWS)
    def test_partition(self, spec, partition, surface, betti):
        """Test the instigator partition."""
        assert instigator_partition(generate(spec)).as_tuple() == partition

    @pytest.mark.parametrize("spec,partition,surface,betti", GOLDEN_ROWS)
    def test_surface_numbers(self, spec, partition, surface, betti):
        """Test components, genus, and boundary cycles."""
        mesh = generate(spec)
        s, g, b = surface
        assert components(mesh)[0] == s
        assert genus(mesh) == g
        assert boundary_cycles(mesh)[0] == b

    @pytest.mark.parametrize("spec,partition,surface,betti", GOLDEN_ROWS)
    def test_betti_both_methods(self, spec, partition, surface, betti):
        """Test closed-form and incremental Betti numbers."""
        mesh = generate(spec)
        assert tuple(betti_closed_form(mesh)) == betti
        assert tuple(betti_incremental(mesh, make_filtration(mesh, 0))) == betti

    @pytest.mark.parametrize("spec,partition,surface,betti", GOLDEN_ROWS)
    def test_report(self, spec, partition, surface, betti):
        """Test the aggregated report satisfies the Euler relations."""
        report = analyze_topology(generate(spec))
        assert report.partition.as_tuple() == partition
        assert tuple(report.betti) == betti
        assert report.euler_characteristic == betti[0] - betti[1] + betti[2]
        s, g, b = surface
        assert report.euler_characteristic == 2 * (s - g) - b


class TestComponents:
    """Test flood-fill components."""

    def test_two_tetrahedra(self):
        """Test two disjoint tetrahedra are two components."""
        tet = generate("tetrahedron")
        mesh = disjoint_union(tet, tet)
        s, labels = components(mesh)
        assert s == 2
        assert labels == [0, 0, 0, 0, 1, 1, 1, 1]

    def test_empty_mesh(self):
        """Test an empty mesh has no components."""
        assert components(build_mesh(0, [])) == (0, [])

    def test_isolated_vertex(self):
        """Test isolated vertices are their own component."""
        tet = generate("tetrahedron")
        assert components(build_mesh(5, tet.faces))[0] == 2


class TestBoundaryCycles:
    """Test boundary tracing."""

    def test_cycles_cover_boundary(self):
        """Test every boundary edge lies on exactly one cycle."""
        mesh = generate("annulus:8")
        b, cycles = boundary_cycles(mesh)
        assert b == 2
        traced = [e for cycle in cycles for e in cycle]
        assert sorted(traced) == list(mesh.boundary_edges())

    def test_moebius_single_boundary(self):
        """Test the Moebius strip has one boundary curve."""
        assert boundary_cycles(generate("moebius"))[0] == 1

    def test_bowtie_pairs_by_wedge(self):
        """Test two triangles at a shared vertex trace two cycles."""
        b, cycles = boundary_cycles(generate("two_triangles_shared_vertex"))
        assert b == 2
        assert all(len(cycle) == 3 for cycle in cycles)

    def test_non_manifold_boundary(self):
        """Test three triangles on one edge cannot be traced."""
        with pytest.raises(NonManifoldBoundaryError):
            boundary_cycles(generate("tri_fan_shared_edge"))

    def test_closed_mesh(self):
        """Test closed meshes have no boundary cycles."""
        assert boundary_cycles(generate("icosahedron")) == (0, [])


class TestPartition:
    """Test spanning forests and the instigator partition."""

    def test_spanning_forest_hexagon(self):
        """Test a hexagon spanning tree has five edges."""
        assert len(spanning_forest(generate("hexagon"))) == 5

    def test_spanning_forest_torus(self):
        """Test a 3x3 torus spanning tree has eight edges."""
        assert len(spanning_forest(generate("torus_grid:3,3"))) == 8

    def test_spanning_forest_two_triangles(self):
        """Test one tree per component."""
        mesh = build_mesh(6, [(0, 1, 2), (3, 4, 5)])
        assert len(spanning_forest(mesh)) == 4

    def test_watertight_components(self):
        """Test open face components are not counted."""
        assert watertight_components(generate("cube_open")) == 0
        assert watertight_components(generate("two_boxes_shared_edge")) == 2
        assert watertight_components(generate("two_tets_shared_vertex")) == 2

    def test_partition_sums(self):
        """Test the partition sums back to V, E, F."""
        mesh = generate("genus_g:2")
        p = instigator_partition(mesh)
        assert (p.vn + p.vc, p.en + p.ec, p.fn + p.fc) == mesh.counts


class TestBettiClosedForm:
    """Test Betti numbers from the partition."""

    def test_three_triangles_on_edge(self):
        """Test the non-manifold fan has the Betti numbers of a disc."""
        mesh = generate("tri_fan_shared_edge")
        assert mesh.counts == (5, 7, 3)
        assert betti_closed_form(mesh) == (1, 0, 0)

    def test_empty_mesh(self):
        """Test an empty mesh has zero Betti numbers."""
        assert betti_closed_form(build_mesh(0, [])) == (0, 0, 0)

    def test_two_boxes_shared_edge(self):
        """Test two boxes on one edge enclose two shells."""
        assert betti_closed_form(generate("two_boxes_shared_edge")) == (1, 0, 2)

    def test_klein_bottle(self):
        """Test the Klein bottle over Z2."""
        assert betti_closed_form(generate("klein_bottle:4,4")) == (1, 2, 1)

    def test_moebius(self):
        """Test the Moebius strip has one independent loop."""
        assert betti_closed_form(generate("moebius")) == (1, 1, 0)


class TestGenus:
    """Test genus from the Euler-Poincare formula."""

    @pytest.mark.parametrize("g", [0, 1, 2, 3, 4])
    def test_genus_chain(self, g):
        """Test the chained-torus generator has the requested genus."""
        mesh = generate(f"genus_g:{g}")
        assert genus(mesh) == g
        assert euler_characteristic(mesh) == 2 - 2 * g

    def test_moebius_undefined(self):
        """Test the Moebius strip has no genus."""
        with pytest.raises(GenusUndefinedError):
            genus(generate("moebius"))

    def test_klein_bottle_undefined(self):
        """Test non-orientable closed surfaces have no genus."""
        with pytest.raises(GenusUndefinedError):
            genus(generate("klein_bottle:3,3"))

    def test_non_manifold_undefined(self):
        """Test non-manifold meshes have no genus."""
        for spec in ("tri_fan_shared_edge", "two_tets_shared_vertex"):
            with pytest.raises(GenusUndefinedError):
                genus(generate(spec))

    def test_face_removal(self):
        """Test removing a face lowers chi by one and adds a boundary curve."""
        torus = generate("torus_grid:3,3")
        opened = torus.without_faces([0])
        assert euler_characteristic(opened) == euler_characteristic(torus) - 1
        assert boundary_cycles(opened)[0] == 1
        assert genus(opened) == 1

    def test_report_marks_undefined(self):
        """Test undefined values become None in the report."""
        report = analyze_topology(generate("tri_fan_shared_edge"))
        assert report.boundary_cycles is None
        assert report.genus is None
        assert tuple(report.betti) == (1, 0, 0)


class TestFiltration:
    """Test random filtrations."""

    def test_covers_every_element(self):
        """Test a tetrahedron filtration has V + E + F entries."""
        mesh = generate("tetrahedron")
        filtration = make_filtration(mesh, 0)
        assert len(filtration) == 14
        validate_filtration(mesh, filtration)

    def test_single_triangle_order(self):
        """Test edges follow their vertices and the face comes last."""
        mesh = build_mesh(3, [(0, 1, 2)])
        filtration = make_filtration(mesh, 7)
        order = filtration.positions()
        assert filtration.elements[-1] == ElementRef.face(0)
        for e in range(3):
            for v in mesh.edge_vertices(e):
                assert order[ElementRef.vertex(v)] < order[ElementRef.edge(e)]

    def test_fig2_length(self):
        """Test the quad-plus-triangle filtration has 13 entries."""
        assert len(make_filtration(generate("fig2"), 3)) == 13

    def test_deterministic(self):
        """Test the same seed gives the same ordering."""
        mesh = generate("torus_grid:3,3")
        assert make_filtration(mesh, 5) == make_filtration(mesh, 5)

    def test_seeds_differ(self):
        """Test different seeds give different orderings."""
        mesh = generate("tetrahedron")
        assert make_filtration(mesh, 0) != make_filtration(mesh, 1)

    def test_face_before_edges_rejected(self):
        """Test precedence violations are rejected."""
        mesh = build_mesh(3, [(0, 1, 2)])
        good = make_filtration(mesh, 0).elements
        bad = Filtration((good[-1],) + good[:-1])
        with pytest.raises(InvalidFiltrationError):
            betti_incremental(mesh, bad)

    def test_missing_element_rejected(self):
        """Test incomplete orderings are rejected."""
        mesh = build_mesh(3, [(0, 1, 2)])
        good = make_filtration(mesh, 0).elements
        with pytest.raises(InvalidFiltrationError):
            validate_filtration(mesh, Filtration(good[:-1]))

    def test_duplicate_rejected(self):
        """Test repeated elements are rejected."""
        mesh = build_mesh(3, [(0, 1, 2)])
        good = make_filtration(mesh, 0).elements
        with pytest.raises(InvalidFiltrationError):
            validate_filtration(mesh, Filtration(good[:-1] + (good[0],)))

    def test_out_of_range_rejected(self):
        """Test references past the element tables are rejected."""
        mesh = build_mesh(3, [(0, 1, 2)])
        good = make_filtration(mesh, 0).elements
        bad = Filtration(good[:-1] + (ElementRef(Dimension.FACE, 1),))
        with pytest.raises(InvalidFiltrationError):
            validate_filtration(mesh, bad)

    def test_non_manifold_rejected(self):
        """Test the incremental algorithm refuses edges with three faces."""
        mesh = generate("tri_fan_shared_edge")
        with pytest.raises(NotEdgeManifoldError):
            betti_incremental(mesh, make_filtration(mesh, 0))


class TestBettiIncremental:
    """Test the incremental algorithm against the closed form."""

    def test_annulus_many_filtrations(self):
        """Test every filtration of the annulus gives (1, 1, 0)."""
        mesh = generate("annulus")
        for seed in range(100):
            assert betti_incremental(mesh, make_filtration(mesh, seed)) == (1, 1, 0)

    @pytest.mark.parametrize(
        "spec",
        [
            "fig2",
            "moebius",
            "klein_bottle:3,4",
            "genus_g:2",
            "two_tets_shared_vertex",
            "two_triangles_shared_vertex",
            "cube_open",
            "dodecahedron",
        ],
    )
    def test_agrees_with_closed_form(self, spec):
        """Test both methods agree over several seeds."""
        mesh = generate(spec)
        expected = betti_closed_form(mesh)
        for seed in range(20):
            assert betti_incremental(mesh, make_filtration(mesh, seed)) == expected

    def test_disjoint_components(self):
        """Test shells are counted per component."""
        tet = generate("tetrahedron")
        mesh = disjoint_union(tet, generate("torus_grid:3,3"))
        assert betti_incremental(mesh, make_filtration(mesh, 11)) == (2, 2, 2)
