"""
Core data models for Meshtura.

Defines mesh element references, element sets, validation and topology
reports, and user-configurable analysis options.
"""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Dimension(IntEnum):
    """Dimension of a mesh element."""

    VERTEX = 0
    EDGE = 1
    FACE = 2


class EdgeWeighting(str, Enum):
    """Edge weights used by the shortest-path tree."""

    AUTO = "auto"  # Euclidean when positions exist, hop count otherwise
    EUCLIDEAN = "euclidean"
    HOPS = "hops"


class BettiMethod(str, Enum):
    """Betti number algorithms."""

    CLOSED_FORM = "closed-form"
    INCREMENTAL = "incremental"


class ValidationStatus(str, Enum):
    """Validation result status."""

    PASSED = "passed"
    WARNING = "warning"
    FAILED = "failed"


@dataclass(frozen=True)
class ElementRef:
    """Reference to a single vertex, edge, or face."""

    dimension: Dimension
    id: int

    @classmethod
    def vertex(cls, index: int) -> "ElementRef":
        return cls(Dimension.VERTEX, index)

    @classmethod
    def edge(cls, index: int) -> "ElementRef":
        return cls(Dimension.EDGE, index)

    @classmethod
    def face(cls, index: int) -> "ElementRef":
        return cls(Dimension.FACE, index)


@dataclass(frozen=True)
class ElementSet:
    """Duplicate-free set of mesh elements sharing one dimension."""

    dimension: Dimension
    members: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, dimension: Dimension, ids: Iterable[int]) -> "ElementSet":
        """Build a set from any iterable of ids."""
        return cls(Dimension(dimension), frozenset(int(i) for i in ids))

    @classmethod
    def empty(cls, dimension: Dimension) -> "ElementSet":
        return cls(Dimension(dimension), frozenset())

    @property
    def ids(self) -> Tuple[int, ...]:
        """Member ids in ascending order."""
        return tuple(sorted(self.members))

    @property
    def is_empty(self) -> bool:
        return not self.members

    def union(self, other: "ElementSet") -> "ElementSet":
        if other.dimension != self.dimension:
            raise ValueError("Cannot join element sets of different dimensions")
        return ElementSet(self.dimension, self.members | other.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids)

    def __contains__(self, item: object) -> bool:
        return item in self.members


class BettiNumbers(NamedTuple):
    """Betti triple (components, independent edge cycles, shells)."""

    b0: int
    b1: int
    b2: int


@dataclass(frozen=True)
class InstigatorPartition:
    """Counts of non-instigating (N) and cycle-instigating (C) elements."""

    vn: int
    vc: int
    en: int
    ec: int
    fn: int
    fc: int

    def as_tuple(self) -> Tuple[int, int, int, int, int, int]:
        return (self.vn, self.vc, self.en, self.ec, self.fn, self.fc)

    def to_dict(self) -> Dict[str, int]:
        return {
            "VN": self.vn,
            "VC": self.vc,
            "EN": self.en,
            "EC": self.ec,
            "FN": self.fn,
            "FC": self.fc,
        }


@dataclass
class ValidationIssue:
    """A single validation finding."""

    severity: ValidationStatus
    message: str
    check: str
    element: Optional[ElementRef] = None
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class BoundaryVertex:
    """A vertex with more than two incident boundary edges."""

    vertex: int
    boundary_edge_count: int
    acceptable: bool
    wedge_pairs: Tuple[Tuple[int, ...], ...] = ()  # Boundary edges grouped by wedge


@dataclass
class ValidationReport:
    """Qualitative topology of a mesh."""

    edge_manifold: bool = True
    non_manifold_edges: List[int] = field(default_factory=list)
    vertex_links_connected: bool = True
    non_manifold_vertices: List[int] = field(default_factory=list)
    faces_simple: bool = True
    non_simple_faces: List[int] = field(default_factory=list)
    orientable: bool = True
    orientation_witness: Optional[int] = None
    orientation_reliable: bool = True
    watertight: bool = True
    boundary_bowtie_vertices: List[BoundaryVertex] = field(default_factory=list)
    isolated_vertices: List[int] = field(default_factory=list)
    overall_status: ValidationStatus = ValidationStatus.PASSED
    issues: List[ValidationIssue] = field(default_factory=list)

    @property
    def manifold(self) -> bool:
        """Edge-manifold with connected vertex links."""
        return self.edge_manifold and self.vertex_links_connected

    def add_issue(self, issue: ValidationIssue) -> None:
        """Add a validation issue."""
        self.issues.append(issue)

        # Update overall status
        if issue.severity == ValidationStatus.FAILED:
            self.overall_status = ValidationStatus.FAILED
        elif (
            issue.severity == ValidationStatus.WARNING
            and self.overall_status != ValidationStatus.FAILED
        ):
            self.overall_status = ValidationStatus.WARNING

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "status": self.overall_status.value,
            "edge_manifold": self.edge_manifold,
            "non_manifold_edges": list(self.non_manifold_edges),
            "vertex_links_connected": self.vertex_links_connected,
            "non_manifold_vertices": list(self.non_manifold_vertices),
            "faces_simple": self.faces_simple,
            "non_simple_faces": list(self.non_simple_faces),
            "orientation_witness": self.orientation_witness,
            "orientation_reliable": self.orientation_reliable,
            "boundary_bowtie_vertices": [
                {
                    "vertex": bv.vertex,
                    "boundary_edges": bv.boundary_edge_count,
                    "acceptable": bv.acceptable,
                }
                for bv in self.boundary_bowtie_vertices
            ],
            "isolated_vertices": list(self.isolated_vertices),
            "issues": [
                {
                    "severity": issue.severity.value,
                    "check": issue.check,
                    "message": issue.message,
                }
                for issue in self.issues
            ],
        }


@dataclass(frozen=True)
class TopologyReport:
    """Quantitative topology of a mesh."""

    vertex_count: int
    edge_count: int
    face_count: int
    components: int
    boundary_cycles: Optional[int]  # None when boundary edges cannot be paired
    euler_characteristic: int
    genus: Optional[int]  # None when undefined
    watertight_components: int
    partition: InstigatorPartition
    betti: BettiNumbers

    def to_dict(self) -> Dict[str, Any]:
        return {
            "counts": {"V": self.vertex_count, "E": self.edge_count, "F": self.face_count},
            "components": self.components,
            "boundary_cycles": self.boundary_cycles,
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
            "watertight_components": self.watertight_components,
            "partition": self.partition.to_dict(),
            "betti": list(self.betti),
        }


@dataclass(frozen=True)
class CutGraphSummary:
    """Compact description of a cut graph for reports."""

    root: int
    loops: int
    loop_lengths: Tuple[int, ...]
    cut_edge_count: int
    puncture_edge: Optional[int] = None


class AnalysisOptions(BaseModel):
    """User-configurable analysis options."""

    model_config = ConfigDict(frozen=True)

    # Cut graph
    root: Optional[int] = Field(default=None, ge=0)
    include_cut_graph: bool = True
    edge_weighting: EdgeWeighting = EdgeWeighting.AUTO

    # Betti numbers
    betti_method: BettiMethod = BettiMethod.CLOSED_FORM
    seed: int = 0
    trials: int = Field(default=1, ge=1)
