"""
Small meshes with known defects, used for diagnostics and tests.
"""

import numpy as np

from meshtura.core.mesh import Mesh, build_mesh
from meshtura.generators.base import MeshGenerator
from meshtura.generators.platonic import cube


def fig2() -> Mesh:
    """A quad and a triangle sharing one edge (V=5, E=6, F=2)."""
    points = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0], [2, 0.5, 0]]
    return build_mesh(5, [(0, 1, 2, 3), (1, 4, 2)], points)


def tri_fan_shared_edge() -> Mesh:
    """Three triangles sharing edge (0, 1)."""
    points = [[0, 0, 0], [1, 0, 0], [0.5, 1, 0], [0.5, -1, 0], [0.5, 0, 1]]
    return build_mesh(5, [(0, 1, 2), (1, 0, 3), (0, 1, 4)], points)


def two_tets_shared_vertex() -> Mesh:
    """Two tetrahedra joined at vertex 0."""
    points = [
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [-1, 0, 0],
        [0, -1, 0],
        [0, 0, -1],
    ]
    faces = [
        (0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3),
        (0, 5, 4), (0, 4, 6), (0, 6, 5), (4, 5, 6),
    ]
    return build_mesh(7, faces, points)


def cube_open() -> Mesh:
    """Cube with its top face removed."""
    return cube().without_faces([1])


def two_boxes_shared_edge() -> Mesh:
    """
    Two cubes sharing one edge.

    The second cube is shifted by (2, 2, 0) so that its edge through
    (-1, -1, z) lands on the first cube's edge through (1, 1, z).
    """
    first = cube()
    shift = np.array([2.0, 2.0, 0.0])
    # Second cube's vertices 0 and 4 coincide with the first cube's 2 and 6
    relabel = {0: 2, 4: 6}
    next_id = first.vertex_count
    points = [p for p in first.positions]
    for v in range(8):
        if v not in relabel:
            relabel[v] = next_id
            points.append(first.positions[v] + shift)
            next_id += 1

    faces = list(first.faces) + [tuple(relabel[v] for v in face) for face in first.faces]
    return build_mesh(next_id, faces, np.array(points))


def two_triangles_shared_vertex() -> Mesh:
    """Two triangles touching at vertex 0 only."""
    points = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [-1, 0, 0], [-1, -1, 0]]
    return build_mesh(5, [(0, 1, 2), (0, 3, 4)], points)


class Fig2Generator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "fig2"

    def build(self) -> Mesh:
        return fig2()


class TriFanSharedEdgeGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "tri_fan_shared_edge"

    def build(self) -> Mesh:
        return tri_fan_shared_edge()


class TwoTetsSharedVertexGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "two_tets_shared_vertex"

    def build(self) -> Mesh:
        return two_tets_shared_vertex()


class CubeOpenGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "cube_open"

    def build(self) -> Mesh:
        return cube_open()


class TwoBoxesSharedEdgeGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "two_boxes_shared_edge"

    def build(self) -> Mesh:
        return two_boxes_shared_edge()


class TwoTrianglesSharedVertexGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "two_triangles_shared_vertex"

    def build(self) -> Mesh:
        return two_triangles_shared_vertex()
