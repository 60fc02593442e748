"""
Main analysis controller for Meshtura.

Orchestrates loading, validation, topology, Betti checks, cut graphs,
reports, and audit records for one or many inputs.
"""

import hashlib
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from meshtura.core.audit import AuditLogger
from meshtura.core.cutgraph import CutGraph, build_cut_graphs
from meshtura.core.errors import MeshParseError
from meshtura.core.filtration import betti_incremental, make_filtration
from meshtura.core.mesh import Mesh
from meshtura.core.models import (
    AnalysisOptions,
    BettiMethod,
    BettiNumbers,
    TopologyReport,
    ValidationReport,
)
from meshtura.core.obj_format import parse_obj
from meshtura.core.off_format import parse_off
from meshtura.core.report import ReportDocument, build_report
from meshtura.core.topology import analyze_topology, betti_closed_form
from meshtura.core.validator import MeshValidator
from meshtura.generators import GeneratorRegistry, GeneratorSpec, default_registry

logger = logging.getLogger(__name__)

MeshSource = Union[Path, GeneratorSpec]


@dataclass
class BettiComparison:
    """Closed-form Betti numbers against incremental runs over random filtrations."""

    closed_form: BettiNumbers
    incremental: List[BettiNumbers] = field(default_factory=list)

    @property
    def agreeing(self) -> int:
        return sum(1 for b in self.incremental if b == self.closed_form)

    @property
    def all_agree(self) -> bool:
        return self.agreeing == len(self.incremental)


@dataclass
class AnalysisResult:
    """Result of analysing one input."""

    success: bool
    input_id: str
    input_hash: Optional[str] = None
    mesh: Optional[Mesh] = None
    validation: Optional[ValidationReport] = None
    topology: Optional[TopologyReport] = None
    betti: Optional[BettiComparison] = None
    cut_graphs: List[CutGraph] = field(default_factory=list)
    report: Optional[ReportDocument] = None
    options: Optional[AnalysisOptions] = None
    error_message: Optional[str] = None
    processing_time_seconds: float = 0.0


def load_mesh(path: Path) -> Mesh:
    """
    Read an OBJ or OFF file.

    Raises:
        OSError: the file cannot be read
        MeshParseError: unknown extension or malformed contents
    """
    data = path.read_bytes()
    suffix = path.suffix.lower()
    if suffix == ".obj":
        return parse_obj(data)
    if suffix == ".off":
        return parse_off(data)
    raise MeshParseError(f"Unsupported mesh format {suffix or '(none)'!r}; use .obj or .off")


def compare_betti(mesh: Mesh, seed: int = 0, trials: int = 1) -> BettiComparison:
    """Run the incremental algorithm on `trials` filtrations seeded seed, seed+1, ..."""
    comparison = BettiComparison(closed_form=betti_closed_form(mesh))
    for k in range(trials):
        comparison.incremental.append(betti_incremental(mesh, make_filtration(mesh, seed + k)))
    return comparison


class AnalysisController:
    """Main controller for mesh analysis."""

    def __init__(
        self,
        registry: Optional[GeneratorRegistry] = None,
        audit_dir: Optional[Path] = None,
    ):
        """
        Initialize analysis controller.

        Args:
            registry: Generator registry used for `--gen` inputs
            audit_dir: Directory for audit records (optional)
        """
        self.registry = registry or default_registry()
        self.validator = MeshValidator()

        # Initialize audit logger if directory provided
        self.audit_logger = AuditLogger(audit_dir) if audit_dir else None

    def resolve(self, source: MeshSource) -> Tuple[str, Mesh, Optional[str]]:
        """Load a file or run a generator; returns (input id, mesh, content hash)."""
        if isinstance(source, GeneratorSpec):
            return str(source), self.registry.generate(source), None
        return str(source), load_mesh(source), self._compute_file_hash(source)

    def analyze(self, source: MeshSource, options: AnalysisOptions) -> AnalysisResult:
        """
        Analyse one input.

        Failures are captured in the result rather than raised.

        Args:
            source: File path or generator spec
            options: Analysis options

        Returns:
            Analysis result
        """
        start_time = time.time()
        input_id = str(source)

        try:
            # Step 1: Load
            input_id, mesh, input_hash = self.resolve(source)
            logger.info("Analysing %s (V=%d E=%d F=%d)", input_id, *mesh.counts)

            # Step 2: Qualitative topology
            validation = self.validator.validate(mesh)

            # Step 3: Quantitative topology
            topology = analyze_topology(mesh, self.validator)

            # Step 4: Incremental Betti cross-check
            betti = None
            if options.betti_method == BettiMethod.INCREMENTAL:
                betti = compare_betti(mesh, options.seed, options.trials)
                if not betti.all_agree:
                    logger.error(
                        "Betti methods disagree on %s: %d/%d",
                        input_id,
                        betti.agreeing,
                        len(betti.incremental),
                    )

            # Step 5: Cut graphs
            cut_graphs: List[CutGraph] = []
            if options.include_cut_graph:
                cut_graphs = self.cut_graphs(mesh, validation, options)

            report = build_report(
                input_id, validation, topology, [cg.summary() for cg in cut_graphs]
            )

            result = AnalysisResult(
                success=True,
                input_id=input_id,
                input_hash=input_hash,
                mesh=mesh,
                validation=validation,
                topology=topology,
                betti=betti,
                cut_graphs=cut_graphs,
                report=report,
                options=options,
                processing_time_seconds=time.time() - start_time,
            )

        except Exception as e:
            logger.warning("Analysis of %s failed: %s", input_id, e)
            result = AnalysisResult(
                success=False,
                input_id=input_id,
                options=options,
                error_message=str(e),
                processing_time_seconds=time.time() - start_time,
            )

        # Step 6: Audit logging
        if self.audit_logger:
            self.audit_logger.log_analysis(result)

        return result

    def analyze_many(
        self, sources: Sequence[MeshSource], options: AnalysisOptions, workers: int = 4
    ) -> List[AnalysisResult]:
        """Analyse several inputs concurrently; results keep input order."""
        if len(sources) <= 1 or workers <= 1:
            return [self.analyze(source, options) for source in sources]

        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda source: self.analyze(source, options), sources))

    def cut_graphs(
        self, mesh: Mesh, validation: ValidationReport, options: AnalysisOptions
    ) -> List[CutGraph]:
        """
        One cut graph per component of a closed edge-manifold mesh.

        The component containing `options.root` is rooted there; the others
        at their lowest vertex. Open or non-manifold meshes get none.

        Raises:
            IndexOutOfRangeError / InvalidRootError: unusable `options.root`
        """
        if not (validation.watertight and validation.edge_manifold):
            logger.info("Skipping cut graph: mesh is not closed and edge-manifold")
            return []

        return build_cut_graphs(mesh, options.edge_weighting, options.root)

    @staticmethod
    def _compute_file_hash(file_path: Path) -> str:
        """Compute SHA-256 hash of file."""
        sha256 = hashlib.sha256()

        with open(file_path, "rb") as f:
            while chunk := f.read(8192):
                sha256.update(chunk)

        return sha256.hexdigest()
