"""
Audit journal for Meshtura runs.

Writes one JSON record per analysed input plus an append-only JSONL index.
Records carry timestamps, so they live outside the deterministic report.
"""

import hashlib
import json
import logging
import threading
from datetime import datetime
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict

if TYPE_CHECKING:
    from meshtura.core.controller import AnalysisResult

logger = logging.getLogger(__name__)


class AuditLogger:
    """Manages audit records for mesh analyses."""

    def __init__(self, log_dir: Path):
        """
        Initialize audit logger.

        Args:
            log_dir: Directory for storing audit records
        """
        self.log_dir = log_dir
        self.log_dir.mkdir(parents=True, exist_ok=True)

        self.index_file = log_dir / "audit_index.jsonl"
        self._index_lock = threading.Lock()

    def log_analysis(self, result: "AnalysisResult") -> Path:
        """
        Log an analysis run.

        Safe to call from several worker threads.

        Args:
            result: Analysis result

        Returns:
            Path to the record file
        """
        timestamp = datetime.now()
        log_id = self._generate_log_id(result.input_id, timestamp)

        topology = None
        if result.topology is not None:
            topology = {
                "counts": list((result.topology.vertex_count, result.topology.edge_count, result.topology.face_count)),
                "genus": result.topology.genus,
                "betti": list(result.topology.betti),
            }

        log_entry = {
            "log_id": log_id,
            "timestamp": timestamp.isoformat(),
            "input": {
                "id": result.input_id,
                "hash": result.input_hash,
            },
            "options": result.options.model_dump(mode="json") if result.options else None,
            "validation": {
                "status": result.validation.overall_status.value if result.validation else None,
                "issues_count": len(result.validation.issues) if result.validation else 0,
            },
            "topology": topology,
            "performance": {
                "processing_time_seconds": result.processing_time_seconds,
            },
            "success": result.success,
            "error_message": result.error_message,
        }

        log_file = self.log_dir / f"{log_id}.json"
        with open(log_file, "w", encoding="utf-8") as f:
            json.dump(log_entry, f, indent=2)

        self._append_to_index(log_entry)
        logger.debug("Audit record written to %s", log_file)

        return log_file

    def _generate_log_id(self, input_id: str, timestamp: datetime) -> str:
        """Generate unique log ID."""
        stem = Path(input_id).name.replace(":", "_").replace(",", "_") or "mesh"
        base = f"{stem}_{timestamp.strftime('%Y%m%d_%H%M%S')}"
        # Short hash for uniqueness
        hash_val = hashlib.md5(f"{input_id}_{timestamp.isoformat()}".encode()).hexdigest()[:8]
        return f"{base}_{hash_val}"

    def _append_to_index(self, log_entry: Dict[str, Any]) -> None:
        """Append a summary line to the JSONL index."""
        index_entry = {
            "log_id": log_entry["log_id"],
            "timestamp": log_entry["timestamp"],
            "input": log_entry["input"]["id"],
            "validation_status": log_entry["validation"]["status"],
            "success": log_entry["success"],
        }

        with self._index_lock, open(self.index_file, "a", encoding="utf-8") as f:
            f.write(json.dumps(index_entry) + "\n")
