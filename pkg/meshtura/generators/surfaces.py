"""
Surface generators: discs, strips, tori, Klein bottles, and higher genus.
"""

from typing import Dict, List, Tuple

import numpy as np

from meshtura.core.mesh import Mesh, build_mesh
from meshtura.generators.base import MeshGenerator
from meshtura.generators.platonic import cube

TAU = 2.0 * np.pi


def hexagon() -> Mesh:
    """A single hexagonal face."""
    angles = TAU * np.arange(6) / 6
    points = np.stack([np.cos(angles), np.sin(angles), np.zeros(6)], axis=1)
    return build_mesh(6, [tuple(range(6))], points)


def annulus(n: int = 6) -> Mesh:
    """Ring of n quads between an inner and an outer circle."""
    angles = TAU * np.arange(n) / n
    ring = np.stack([np.cos(angles), np.sin(angles), np.zeros(n)], axis=1)
    points = np.vstack([ring, 2.0 * ring])
    faces = [(i, (i + 1) % n, n + (i + 1) % n, n + i) for i in range(n)]
    return build_mesh(2 * n, faces, points)


def moebius(n: int = 6) -> Mesh:
    """
    Ring of n quads closed with a half twist.

    Vertices 0..n-1 run along the top edge and n..2n-1 along the bottom;
    the last quad joins top to bottom.
    """
    points = []
    for half in (0.5, -0.5):
        for i in range(n):
            theta = TAU * i / n
            radial = np.array([np.cos(theta), np.sin(theta), 0.0])
            offset = half * (np.cos(theta / 2) * radial + np.sin(theta / 2) * np.array([0, 0, 1.0]))
            points.append(2.0 * radial + offset)

    faces = [(i, i + 1, n + i + 1, n + i) for i in range(n - 1)]
    faces.append((n - 1, n, 0, 2 * n - 1))
    return build_mesh(2 * n, faces, np.array(points))


def _grid_points(m: int, n: int, major: float = 2.0, minor: float = 1.0) -> np.ndarray:
    u = TAU * np.arange(m) / m
    v = TAU * np.arange(n) / n
    uu, vv = np.meshgrid(u, v, indexing="ij")
    x = (major + minor * np.cos(vv)) * np.cos(uu)
    y = (major + minor * np.cos(vv)) * np.sin(uu)
    z = minor * np.sin(vv)
    return np.stack([x.ravel(), y.ravel(), z.ravel()], axis=1)


def _torus_faces(m: int, n: int) -> List[Tuple[int, int, int, int]]:
    def vid(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    return [
        (vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))
        for i in range(m)
        for j in range(n)
    ]


def torus_grid(m: int, n: int) -> Mesh:
    """m x n quad grid with both directions wrapped; vertex (i, j) has id i*n + j."""
    return build_mesh(m * n, _torus_faces(m, n), _grid_points(m, n))


def klein_bottle(m: int, n: int) -> Mesh:
    """
    m x n quad grid whose last row wraps to row 0 with j -> -j (mod n).

    Positions follow the figure-eight immersion, which makes the same
    identification.
    """

    def vid(i: int, j: int) -> int:
        if i == m:
            return (-j) % n
        return i * n + (j % n)

    faces = [
        (vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))
        for i in range(m)
        for j in range(n)
    ]

    u = TAU * np.arange(m) / m
    v = TAU * np.arange(n) / n
    uu, vv = np.meshgrid(u, v, indexing="ij")
    tube = np.cos(uu / 2) * np.sin(vv) - np.sin(uu / 2) * np.sin(2 * vv)
    x = (3.0 + tube) * np.cos(uu)
    y = (3.0 + tube) * np.sin(uu)
    z = np.sin(uu / 2) * np.sin(vv) + np.cos(uu / 2) * np.sin(2 * vv)
    points = np.stack([x.ravel(), y.ravel(), z.ravel()], axis=1)
    return build_mesh(m * n, faces, points)


# 4x4 torus cells removed to glue neighbours in the genus chain
_LEFT_HOLE = ((0, 0), (1, 0), (1, 1), (0, 1))
_RIGHT_HOLE = ((2, 2), (3, 2), (3, 3), (2, 3))
# Left-hole corner k of the next torus takes the right-hole corner _GLUE[k]
_GLUE = (0, 3, 2, 1)


def genus_g(g: int) -> Mesh:
    """
    Closed orientable surface of genus g.

    g = 0 is a cube. Otherwise g 4x4 grid tori are chained: torus k loses
    its cell (2, 2) and torus k+1 its cell (0, 0), and the two hole
    boundaries are glued with reversed orientation.
    """
    if g == 0:
        return cube()

    size = 4
    cell_faces = _torus_faces(size, size)
    base_points = _grid_points(size, size, major=2.0, minor=0.8)

    ids: List[Dict[Tuple[int, int], int]] = []
    points: List[np.ndarray] = []
    faces: List[Tuple[int, ...]] = []

    for k in range(g):
        mapping: Dict[Tuple[int, int], int] = {}
        if k > 0:
            previous = ids[k - 1]
            for corner, glued in zip(_LEFT_HOLE, _GLUE):
                mapping[corner] = previous[_RIGHT_HOLE[glued]]
        for i in range(size):
            for j in range(size):
                if (i, j) not in mapping:
                    mapping[(i, j)] = len(points)
                    points.append(base_points[i * size + j] + np.array([4.5 * k, 0.0, 0.0]))
        ids.append(mapping)

        removed = set()
        if k > 0:
            removed.add(0)  # cell (0, 0)
        if k < g - 1:
            removed.add(2 * size + 2)  # cell (2, 2)

        for index, face in enumerate(cell_faces):
            if index in removed:
                continue
            faces.append(tuple(mapping[divmod(v, size)] for v in face))

    return build_mesh(len(points), faces, np.array(points))


class HexagonGenerator(MeshGenerator):
    def get_generator_id(self) -> str:
        return "hexagon"

    def build(self) -> Mesh:
        return hexagon()


class AnnulusGenerator(MeshGenerator):
    parameters = ("n",)
    defaults = (6,)
    minimums = (3,)

    def get_generator_id(self) -> str:
        return "annulus"

    def build(self, n: int) -> Mesh:
        return annulus(n)


class MoebiusGenerator(MeshGenerator):
    parameters = ("n",)
    defaults = (6,)
    minimums = (3,)

    def get_generator_id(self) -> str:
        return "moebius"

    def build(self, n: int) -> Mesh:
        return moebius(n)


class TorusGridGenerator(MeshGenerator):
    parameters = ("m", "n")
    defaults = (None, None)
    minimums = (3, 3)

    def get_generator_id(self) -> str:
        return "torus_grid"

    def build(self, m: int, n: int) -> Mesh:
        return torus_grid(m, n)


class KleinBottleGenerator(MeshGenerator):
    parameters = ("m", "n")
    defaults = (None, None)
    minimums = (3, 3)

    def get_generator_id(self) -> str:
        return "klein_bottle"

    def build(self, m: int, n: int) -> Mesh:
        return klein_bottle(m, n)


class GenusGenerator(MeshGenerator):
    parameters = ("g",)
    defaults = (None,)
    minimums = (0,)

    def get_generator_id(self) -> str:
        return "genus_g"

    def build(self, g: int) -> Mesh:
        return genus_g(g)
