"""
Versioned JSON topology report.

Reports serialize with sorted keys and stable list orders, so identical
inputs give byte-identical output.
"""

import json
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from meshtura import __version__
from meshtura.core.models import CutGraphSummary, TopologyReport, ValidationReport

SCHEMA_VERSION = 1


class Counts(BaseModel):
    V: int
    E: int
    F: int


class Partition(BaseModel):
    VN: int
    VC: int
    EN: int
    EC: int
    FN: int
    FC: int


class CutGraphSection(BaseModel):
    """Cut-graph summary over every component."""

    loops: int
    loop_lengths: List[int]
    B_size: int
    root: int
    roots: List[int]
    puncture_edges: List[int] = Field(default_factory=list)


class ReportDocument(BaseModel):
    """Full analysis report for one input."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    tool_version: str = __version__
    input: str
    counts: Counts
    components: int
    boundary_cycles: Optional[int]
    euler_characteristic: int
    genus: Optional[int]
    watertight: bool
    orientable: bool
    manifold: bool
    partition: Partition
    betti: List[int]
    validation: Dict[str, Any]
    cutgraph: Optional[CutGraphSection] = None

    def to_json(self) -> str:
        """Deterministic JSON text."""
        payload = self.model_dump(by_alias=True, mode="json")
        if payload["cutgraph"] is None:
            del payload["cutgraph"]
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.model_validate(json.loads(text))


def build_report(
    input_id: str,
    validation: ValidationReport,
    topology: TopologyReport,
    cut_graphs: Optional[Sequence[CutGraphSummary]] = None,
) -> ReportDocument:
    """
    Assemble a report from analysis results.

    Args:
        input_id: File path or generator spec
        validation: Qualitative checks
        topology: Quantitative topology
        cut_graphs: One summary per component, or None to omit the section

    Returns:
        ReportDocument
    """
    section = None
    if cut_graphs:
        section = CutGraphSection(
            loops=sum(cg.loops for cg in cut_graphs),
            loop_lengths=[n for cg in cut_graphs for n in cg.loop_lengths],
            B_size=sum(cg.cut_edge_count for cg in cut_graphs),
            root=cut_graphs[0].root,
            roots=[cg.root for cg in cut_graphs],
            puncture_edges=[cg.puncture_edge for cg in cut_graphs if cg.puncture_edge is not None],
        )

    return ReportDocument(
        input=input_id,
        counts=Counts(V=topology.vertex_count, E=topology.edge_count, F=topology.face_count),
        components=topology.components,
        boundary_cycles=topology.boundary_cycles,
        euler_characteristic=topology.euler_characteristic,
        genus=topology.genus,
        watertight=validation.watertight,
        orientable=validation.orientable,
        manifold=validation.manifold,
        partition=Partition(**topology.partition.to_dict()),
        betti=list(topology.betti),
        validation=validation.to_dict(),
        cutgraph=section,
    )
