"""
Base generator system for Meshtura.

Defines the generator interface, the textual generator spec, and the registry.
"""

import logging
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from meshtura.core.errors import InvalidSpecError
from meshtura.core.mesh import Mesh

logger = logging.getLogger(__name__)


class GeneratorSpec(BaseModel):
    """Generator kind plus integer parameters, written `name` or `name:a,b`."""

    model_config = ConfigDict(frozen=True)

    kind: str = Field(min_length=1, pattern=r"^[a-z0-9_]+$")
    params: Tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        """
        Parse a spec string.

        Raises:
            InvalidSpecError: malformed name or non-integer parameter
        """
        kind, _, rest = text.strip().partition(":")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest.strip() else ()
        except ValueError as e:
            raise InvalidSpecError(f"Generator parameters must be integers: {text!r}") from e

        try:
            return cls(kind=kind.strip(), params=params)
        except ValidationError as e:
            raise InvalidSpecError(f"Invalid generator spec {text!r}") from e

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


class MeshGenerator(ABC):
    """Base class for deterministic mesh generators."""

    # Parameter names, defaults (None = required) and lower bounds
    parameters: Tuple[str, ...] = ()
    defaults: Tuple[Optional[int], ...] = ()
    minimums: Tuple[int, ...] = ()

    def __init__(self):
        self.generator_id = self.get_generator_id()

    @abstractmethod
    def get_generator_id(self) -> str:
        """Get unique generator identifier."""
        pass

    @abstractmethod
    def build(self, *params: int) -> Mesh:
        """
        Build the mesh.

        Args:
            params: Resolved parameters, one per entry of `parameters`

        Returns:
            Generated mesh
        """
        pass

    def describe(self) -> str:
        """One-line usage string."""
        if not self.parameters:
            return self.generator_id
        return f"{self.generator_id}:{','.join(self.parameters)}"

    def resolve_params(self, params: Tuple[int, ...]) -> Tuple[int, ...]:
        """
        Fill defaults and check bounds.

        Raises:
            InvalidSpecError: too many, missing, or out-of-range parameters
        """
        if len(params) > len(self.parameters):
            raise InvalidSpecError(
                f"{self.generator_id} takes {len(self.parameters)} parameters, got {len(params)}"
            )

        resolved = list(params)
        for default in self.defaults[len(params):]:
            if default is None:
                raise InvalidSpecError(f"Missing parameters; usage: {self.describe()}")
            resolved.append(default)

        for name, value, minimum in zip(self.parameters, resolved, self.minimums):
            if value < minimum:
                raise InvalidSpecError(
                    f"{self.generator_id}: {name} must be >= {minimum}, got {value}"
                )
        return tuple(resolved)

    def generate(self, params: Tuple[int, ...] = ()) -> Mesh:
        return self.build(*self.resolve_params(params))


class GeneratorRegistry:
    """Registry for managing mesh generators."""

    def __init__(self):
        self.generators: List[MeshGenerator] = []

    def register(self, generator: MeshGenerator) -> None:
        """Register a generator."""
        self.generators.append(generator)

    def get_generator_by_id(self, generator_id: str) -> Optional[MeshGenerator]:
        """Get generator by ID."""
        for generator in self.generators:
            if generator.get_generator_id() == generator_id:
                return generator
        return None

    def list_generators(self) -> List[str]:
        """List all registered generator IDs."""
        return [generator.get_generator_id() for generator in self.generators]

    def generate(self, spec: Union[GeneratorSpec, str]) -> Mesh:
        """
        Generate the mesh a spec describes.

        Raises:
            InvalidSpecError: unknown kind or invalid parameters
        """
        if isinstance(spec, str):
            spec = GeneratorSpec.parse(spec)

        generator = self.get_generator_by_id(spec.kind)
        if generator is None:
            raise InvalidSpecError(
                f"Unknown generator {spec.kind!r}; known: {', '.join(self.list_generators())}"
            )

        mesh = generator.generate(spec.params)
        logger.debug("Generated %s: V=%d E=%d F=%d", spec, *mesh.counts)
        return mesh
