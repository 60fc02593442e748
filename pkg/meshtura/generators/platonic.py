"""
Platonic solid generators.

All solids are centred at the origin with outward-facing winding.
"""

from itertools import combinations, product
from typing import List, Sequence, Tuple

import numpy as np

from meshtura.core.mesh import Mesh, build_mesh
from meshtura.generators.base import MeshGenerator

GOLDEN_RATIO = (1.0 + np.sqrt(5.0)) / 2.0


def _orient_outward(points: np.ndarray, faces: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Reverse every face whose normal points towards the origin."""
    oriented = []
    for face in faces:
        a, b, c = points[face[0]], points[face[1]], points[face[2]]
        normal = np.cross(b - a, c - a)
        if np.dot(normal, points[list(face)].mean(axis=0)) < 0:
            face = tuple(reversed(face))
        oriented.append(tuple(int(v) for v in face))
    return oriented


def _order_around(points: np.ndarray, axis: np.ndarray, members: Sequence[int]) -> List[int]:
    """Sort points by angle around an axis through the origin."""
    n = axis / np.linalg.norm(axis)
    helper = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = np.cross(n, helper)
    u /= np.linalg.norm(u)
    w = np.cross(n, u)
    angles = [np.arctan2(np.dot(points[m], w), np.dot(points[m], u)) for m in members]
    return [m for _, m in sorted(zip(angles, members))]


def tetrahedron() -> Mesh:
    points = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=np.float64)
    faces = _orient_outward(points, list(combinations(range(4), 3)))
    return build_mesh(4, faces, points)


def cube() -> Mesh:
    points = np.array(
        [
            [-1, -1, -1],
            [1, -1, -1],
            [1, 1, -1],
            [-1, 1, -1],
            [-1, -1, 1],
            [1, -1, 1],
            [1, 1, 1],
            [-1, 1, 1],
        ],
        dtype=np.float64,
    )
    faces = [(0, 3, 2, 1), (4, 5, 6, 7), (0, 1, 5, 4), (2, 3, 7, 6), (0, 4, 7, 3), (1, 2, 6, 5)]
    return build_mesh(8, _orient_outward(points, faces), points)


def octahedron() -> Mesh:
    points = np.array(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=np.float64
    )
    faces = [(x, y, z) for x, y, z in product((0, 1), (2, 3), (4, 5))]
    return build_mesh(6, _orient_outward(points, faces), points)


def _icosahedron_points() -> np.ndarray:
    phi = GOLDEN_RATIO
    points = []
    for s, t in product((-1.0, 1.0), repeat=2):
        points.append([0.0, s, t * phi])
    for s, t in product((-1.0, 1.0), repeat=2):
        points.append([s, t * phi, 0.0])
    for s, t in product((-1.0, 1.0), repeat=2):
        points.append([s * phi, 0.0, t])
    return np.array(points, dtype=np.float64)


def icosahedron() -> Mesh:
    points = _icosahedron_points()
    # Faces are the triples at mutual edge length 2
    faces = [
        triple
        for triple in combinations(range(12), 3)
        if all(
            np.isclose(np.linalg.norm(points[a] - points[b]), 2.0)
            for a, b in combinations(triple, 2)
        )
    ]
    return build_mesh(12, _orient_outward(points, faces), points)


def dodecahedron() -> Mesh:
    """Dual of the icosahedron: one vertex per icosahedron face."""
    ico = icosahedron()
    centres = np.array([ico.positions[list(face)].mean(axis=0) for face in ico.faces])
    faces = [
        _order_around(centres, ico.positions[v], ico.vertex_faces[v])
        for v in range(ico.vertex_count)
    ]
    return build_mesh(len(centres), _orient_outward(centres, faces), centres)


class TetrahedronGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "tetrahedron"

    def build(self) -> Mesh:
        return tetrahedron()


class CubeGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "cube"

    def build(self) -> Mesh:
        return cube()


class OctahedronGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "octahedron"

    def build(self) -> Mesh:
        return octahedron()


class DodecahedronGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "dodecahedron"

    def build(self) -> Mesh:
        return dodecahedron()


class IcosahedronGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "icosahedron"

    def build(self) -> Mesh:
        return icosahedron()
