"""
CSV summary output for Meshtura.

Writes one row per analysed input.
"""

import csv
from pathlib import Path
from typing import List, Sequence

from meshtura.core.report import ReportDocument

SUMMARY_COLUMNS = [
    "input",
    "V",
    "E",
    "F",
    "components",
    "boundary_cycles",
    "euler_characteristic",
    "genus",
    "watertight",
    "orientable",
    "manifold",
    "VN",
    "VC",
    "EN",
    "EC",
    "FN",
    "FC",
    "b0",
    "b1",
    "b2",
    "status",
    "error",
]


class CSVWriter:
    """Writes analysis summaries to CSV files."""

    def write_summary(
        self,
        output_path: Path,
        reports: Sequence[ReportDocument],
        failures: Sequence[Sequence[str]] = (),
    ) -> Path:
        """
        Write a summary table.

        Args:
            output_path: CSV file to create
            reports: Successful reports, one row each
            failures: (input, error message) pairs for inputs that failed

        Returns:
            Path of the written file
        """
        output_path.parent.mkdir(parents=True, exist_ok=True)

        with open(output_path, "w", newline="", encoding="utf-8") as csvfile:
            writer = csv.writer(csvfile)
            writer.writerow(SUMMARY_COLUMNS)

            for report in reports:
                writer.writerow(self._report_row(report))

            # Failed inputs keep their row with empty measurements
            for input_id, message in failures:
                row = [""] * len(SUMMARY_COLUMNS)
                row[0] = input_id
                row[-2] = "error"
                row[-1] = message
                writer.writerow(row)

        return output_path

    @staticmethod
    def _report_row(report: ReportDocument) -> List[str]:
        def cell(value) -> str:
            return "" if value is None else str(value)

        p = report.partition
        return [
            report.input,
            cell(report.counts.V),
            cell(report.counts.E),
            cell(report.counts.F),
            cell(report.components),
            cell(report.boundary_cycles),
            cell(report.euler_characteristic),
            cell(report.genus),
            cell(report.watertight),
            cell(report.orientable),
            cell(report.manifold),
            cell(p.VN),
            cell(p.VC),
            cell(p.EN),
            cell(p.EC),
            cell(p.FN),
            cell(p.FC),
            *(cell(b) for b in report.betti),
            cell(report.validation.get("status")),
            "",
        ]
