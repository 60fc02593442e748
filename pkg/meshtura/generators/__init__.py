"""Built-in mesh generators."""

from functools import lru_cache
from typing import Union

from meshtura.core.mesh import Mesh
from meshtura.generators.base import GeneratorRegistry, GeneratorSpec, MeshGenerator
from meshtura.generators.pathological import (
    CubeOpenGenerator,
    Fig2Generator,
    TriFanSharedEdgeGenerator,
    TwoBoxesSharedEdgeGenerator,
    TwoTetsSharedVertexGenerator,
    TwoTrianglesSharedVertexGenerator,
)
from meshtura.generators.platonic import (
    CubeGenerator,
    DodecahedronGenerator,
    IcosahedronGenerator,
    OctahedronGenerator,
    TetrahedronGenerator,
)
from meshtura.generators.surfaces import (
    AnnulusGenerator,
    GenusGenerator,
    HexagonGenerator,
    KleinBottleGenerator,
    MoebiusGenerator,
    TorusGridGenerator,
)

__all__ = [
    "GeneratorRegistry",
    "GeneratorSpec",
    "MeshGenerator",
    "default_registry",
    "generate",
]


@lru_cache(maxsize=1)
def default_registry() -> GeneratorRegistry:
    """Registry with every built-in generator."""
    registry = GeneratorRegistry()

    for generator in (
        TetrahedronGenerator(),
        CubeGenerator(),
        OctahedronGenerator(),
        DodecahedronGenerator(),
        IcosahedronGenerator(),
        HexagonGenerator(),
        AnnulusGenerator(),
        MoebiusGenerator(),
        TorusGridGenerator(),
        KleinBottleGenerator(),
        GenusGenerator(),
        Fig2Generator(),
        TriFanSharedEdgeGenerator(),
        TwoTetsSharedVertexGenerator(),
        CubeOpenGenerator(),
        TwoBoxesSharedEdgeGenerator(),
        TwoTrianglesSharedVertexGenerator(),
    ):
        registry.register(generator)

    return registry


def generate(spec: Union[GeneratorSpec, str]) -> Mesh:
    """Generate a built-in mesh from a spec such as `torus_grid:3,3`."""
    return default_registry().generate(spec)
