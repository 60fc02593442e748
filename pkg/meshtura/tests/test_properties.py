"""
Property-based and sweep tests for topological invariants.

Run with: pytest
"""

from itertools import product

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from meshtura.core.cutgraph import build_cut_graph
from meshtura.core.cutting import cut_all_but_cotree, cut_mesh
from meshtura.core.errors import GenusUndefinedError, NonManifoldBoundaryError
from meshtura.core.filtration import betti_incremental, make_filtration
from meshtura.core.mesh import build_mesh
from meshtura.core.topology import (
    analyze_topology,
    betti_closed_form,
    boundary_cycles,
    components,
    euler_characteristic,
    genus,
)
from meshtura.core.validator import MeshValidator
from meshtura.generators import generate

SURFACE_SPECS = [
    "tetrahedron",
    "cube",
    "octahedron",
    "hexagon",
    "annulus",
    "moebius",
    "torus_grid:3,4",
    "klein_bottle:3,3",
    "genus_g:2",
    "fig2",
    "two_tets_shared_vertex",
    "two_triangles_shared_vertex",
    "cube_open",
]

GRID = list(product(range(3, 9), repeat=2))
PLATONIC = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"]
PATHOLOGICAL = [
    "fig2",
    "tri_fan_shared_edge",
    "two_tets_shared_vertex",
    "cube_open",
    "two_boxes_shared_edge",
    "two_triangles_shared_vertex",
]


def sweep_meshes():
    """Generated meshes with parameter sweeps, plus one-face-removed variants."""
    meshes = [(spec, generate(spec)) for spec in PLATONIC + PATHOLOGICAL + ["hexagon"]]
    for n in range(3, 31):
        meshes.append((f"annulus:{n}", generate(f"annulus:{n}")))
        meshes.append((f"moebius:{n}", generate(f"moebius:{n}")))
    for g in range(5):
        mesh = generate(f"genus_g:{g}")
        meshes.append((f"genus_g:{g}", mesh))
        meshes.append((f"genus_g:{g} minus face 0", mesh.without_faces([0])))
    for kind in ("torus_grid", "klein_bottle"):
        for m, n in GRID:
            mesh = generate(f"{kind}:{m},{n}")
            meshes.append((f"{kind}:{m},{n}", mesh))
            meshes.append((f"{kind}:{m},{n} minus face 0", mesh.without_faces([0])))
    return meshes


def filtration_corpus():
    """Edge-manifold generated meshes checked against many filtrations."""
    specs = PLATONIC + ["hexagon", "annulus", "moebius", "fig2", "cube_open"]
    specs += ["two_tets_shared_vertex", "two_triangles_shared_vertex"]
    specs += [f"genus_g:{g}" for g in range(5)]
    specs += [f"{kind}:{m},{n}" for kind in ("torus_grid", "klein_bottle") for m, n in GRID]
    return specs


def closed_orientable_specs():
    return PLATONIC + [f"genus_g:{g}" for g in range(5)] + [f"torus_grid:{m},{n}" for m, n in GRID]


def surface_numbers(mesh):
    return components(mesh)[0], genus(mesh), boundary_cycles(mesh)[0]


def summary(mesh):
    """Labelling-independent topology of a mesh."""
    report = analyze_topology(mesh)
    validation = MeshValidator().validate(mesh)
    return (
        mesh.counts,
        report.components,
        report.boundary_cycles,
        report.genus,
        tuple(report.betti),
        validation.manifold,
        validation.orientable,
        validation.watertight,
    )


@st.composite
def relabelled_mesh(draw):
    """A generated mesh and a copy with permuted vertex ids."""
    mesh = generate(draw(st.sampled_from(SURFACE_SPECS)))
    perm = draw(st.permutations(range(mesh.vertex_count)))
    faces = [tuple(perm[v] for v in face) for face in mesh.faces]
    points = np.empty_like(mesh.positions)
    points[list(perm)] = mesh.positions
    return mesh, build_mesh(mesh.vertex_count, faces, points)


@st.composite
def reindexed_mesh(draw):
    """A generated mesh with shuffled faces and rotated corner lists."""
    mesh = generate(draw(st.sampled_from(SURFACE_SPECS)))
    order = draw(st.permutations(range(mesh.face_count)))
    faces = []
    for f in order:
        face = mesh.faces[f]
        shift = draw(st.integers(min_value=0, max_value=len(face) - 1))
        faces.append(face[shift:] + face[:shift])
    return mesh, build_mesh(mesh.vertex_count, faces, mesh.positions)


class TestInvariance:
    """Test topology does not depend on labelling."""

    @given(relabelled_mesh())
    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_vertex_relabelling(self, pair):
        """Test permuting vertex ids keeps every invariant."""
        mesh, relabelled = pair
        assert summary(mesh) == summary(relabelled)

    @given(reindexed_mesh())
    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    def test_face_reindexing(self, pair):
        """Test reordering faces and corners keeps every invariant."""
        mesh, reindexed = pair
        assert summary(mesh) == summary(reindexed)

    @given(st.sampled_from(SURFACE_SPECS))
    @settings(max_examples=20, deadline=None)
    def test_winding_reversal(self, spec):
        """Test reversing every face keeps every invariant."""
        mesh = generate(spec)
        flipped = build_mesh(
            mesh.vertex_count, [tuple(reversed(f)) for f in mesh.faces], mesh.positions
        )
        assert summary(mesh) == summary(flipped)

    @given(st.sampled_from(SURFACE_SPECS), st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_filtration_seed(self, spec, seed):
        """Test any filtration gives the closed-form Betti numbers."""
        mesh = generate(spec)
        assert betti_incremental(mesh, make_filtration(mesh, seed)) == betti_closed_form(mesh)

    @given(st.integers(min_value=0, max_value=15))
    @settings(max_examples=16, deadline=None)
    def test_cut_graph_root(self, root):
        """Test every root of a 4x4 torus gives two loops and a disc."""
        mesh = generate("torus_grid:4,4")
        cg = build_cut_graph(mesh, root)
        assert len(cg.loops) == 2
        assert surface_numbers(cut_mesh(mesh, cg.cut_set())) == (1, 0, 1)


class TestSweep:
    """Test identities across the generated corpus."""

    def test_corpus_size(self):
        """Test the sweep covers at least 200 meshes."""
        assert len(sweep_meshes()) >= 200

    def test_euler_identities(self):
        """Test chi = b0 - b1 + b2 = 2(s - g) - b wherever the genus is defined."""
        for name, mesh in sweep_meshes():
            chi = euler_characteristic(mesh)
            b0, b1, b2 = betti_closed_form(mesh)
            s, _ = components(mesh)
            assert chi == b0 - b1 + b2, name
            assert b0 == s, name
            try:
                g = genus(mesh)
            except GenusUndefinedError:
                continue
            b, _ = boundary_cycles(mesh)
            assert chi == 2 * (s - g) - b, name

    def test_boundary_tracing(self):
        """Test traced cycles cover every boundary edge once where tracing works."""
        for name, mesh in sweep_meshes():
            try:
                _, cycles = boundary_cycles(mesh)
            except NonManifoldBoundaryError:
                continue
            traced = sorted(e for cycle in cycles for e in cycle)
            assert traced == list(mesh.boundary_edges()), name

    @pytest.mark.parametrize("spec", filtration_corpus())
    def test_filtration_oracle(self, spec):
        """Test 100 random filtrations agree with the closed form."""
        mesh = generate(spec)
        expected = betti_closed_form(mesh)
        for seed in range(100):
            assert betti_incremental(mesh, make_filtration(mesh, seed)) == expected

    @pytest.mark.parametrize("g", range(5))
    def test_loop_count_over_roots(self, g):
        """Test 2g loops for five different roots."""
        mesh = generate(f"genus_g:{g}")
        v = mesh.vertex_count
        for root in (0, v // 4, v // 2, 3 * v // 4, v - 1):
            assert len(build_cut_graph(mesh, root).loops) == 2 * g

    @pytest.mark.parametrize("m,n", [(3, 3), (3, 7), (5, 4), (8, 8)])
    def test_torus_loop_count_over_roots(self, m, n):
        """Test two loops on grid tori for five different roots."""
        mesh = generate(f"torus_grid:{m},{n}")
        v = mesh.vertex_count
        for root in (0, v // 4, v // 2, 3 * v // 4, v - 1):
            assert len(build_cut_graph(mesh, root).loops) == 2

    @pytest.mark.parametrize("spec", closed_orientable_specs())
    def test_cut_to_disc(self, spec):
        """Test the cut graph and the co-tree complement both cut to a disc."""
        mesh = generate(spec)
        cg = build_cut_graph(mesh, 0)
        disc = cut_mesh(mesh, cg.cut_set())
        assert surface_numbers(disc) == (1, 0, 1)
        assert MeshValidator().validate(disc).manifold
        assert surface_numbers(cut_all_but_cotree(mesh, cg.cotree)) == (1, 0, 1)
