"""
Command-line interface for Meshtura.

Subcommands: info, validate, betti, cutgraph, cut.
Exit codes: 0 success, 1 I/O or parse error, 2 validation failure,
3 Betti method disagreement.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from meshtura import __version__
from meshtura.core.controller import AnalysisController, MeshSource, compare_betti
from meshtura.core.csv_writer import CSVWriter
from meshtura.core.cutgraph import CutGraph, build_cut_graphs
from meshtura.core.cutting import cut_mesh
from meshtura.core.errors import GenusUndefinedError, MeshturaError, NonManifoldBoundaryError
from meshtura.core.mesh import Mesh
from meshtura.core.models import BettiMethod, Dimension, EdgeWeighting, ElementSet
from meshtura.core.obj_format import write_obj
from meshtura.core.settings import MeshturaSettings
from meshtura.core.topology import betti_closed_form, boundary_cycles, components, genus
from meshtura.generators import GeneratorSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_DISAGREE = 3


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = argparse.ArgumentParser(
        prog="meshtura", description="Polygonal mesh topology toolkit"
    )
    parser.add_argument("--version", action="version", version=f"meshtura {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument("input", nargs="?", type=Path, help="OBJ or OFF file")
    single.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. torus_grid:3,3")

    rooted = argparse.ArgumentParser(add_help=False)
    rooted.add_argument("--root", type=int, help="root vertex of the cut graph")
    rooted.add_argument(
        "--weighting",
        choices=[w.value for w in EdgeWeighting],
        help="edge weights for the shortest-path tree",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", parents=[common, rooted], help="full topology report")
    info.add_argument("inputs", nargs="*", type=Path, help="OBJ or OFF files")
    info.add_argument("--gen", metavar="SPEC", action="append", default=[], help="generator spec")
    info.add_argument("--json", action="store_true", help="print the JSON report")
    info.add_argument("--csv", type=Path, help="write a one-row-per-input CSV summary")
    info.add_argument("--no-cutgraph", action="store_true", help="skip the cut graph")
    info.add_argument("--audit-dir", type=Path, help="write an audit record per input here")

    sub.add_parser("validate", parents=[single], help="manifold and orientability checks")

    betti = sub.add_parser("betti", parents=[single], help="Betti numbers")
    betti.add_argument(
        "--method",
        choices=[m.value for m in BettiMethod],
        default=BettiMethod.CLOSED_FORM.value,
    )
    betti.add_argument("--seed", type=int, help="first filtration seed")
    betti.add_argument("--trials", type=int, help="number of random filtrations")

    cutgraph = sub.add_parser("cutgraph", parents=[single, rooted], help="generator loops")
    cutgraph.add_argument("--obj", type=Path, help="write the mesh with seam polylines")

    cut = sub.add_parser("cut", parents=[single, rooted], help="cut the mesh into a disc")
    cut.add_argument("--obj", type=Path, required=True, help="output OBJ file")

    return parser


def _configure_logging(settings: MeshturaSettings, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    logging.getLogger("meshtura").setLevel(level)


def _single_source(args: argparse.Namespace) -> MeshSource:
    if (args.input is None) == (args.gen is None):
        raise MeshturaError("Give exactly one of an input file or --gen SPEC")
    if args.gen is not None:
        return GeneratorSpec.parse(args.gen)
    return args.input


def _sources(args: argparse.Namespace) -> List[MeshSource]:
    sources: List[MeshSource] = [GeneratorSpec.parse(spec) for spec in args.gen]
    sources.extend(args.inputs)
    if not sources:
        raise MeshturaError("No inputs given")
    return sources


def _weighting(args: argparse.Namespace, settings: MeshturaSettings) -> EdgeWeighting:
    return EdgeWeighting(args.weighting) if args.weighting else settings.edge_weighting


def cmd_info(args, controller: AnalysisController, settings: MeshturaSettings) -> int:
    options = settings.analysis_options(
        root=args.root,
        edge_weighting=args.weighting,
        include_cut_graph=not args.no_cutgraph,
    )
    results = controller.analyze_many(_sources(args), options, workers=settings.workers)

    failed = [r for r in results if not r.success]
    for result in failed:
        print(f"error: {result.input_id}: {result.error_message}", file=sys.stderr)

    reports = [r.report for r in results if r.success]
    if args.json:
        if len(results) == 1 and reports:
            sys.stdout.write(reports[0].to_json())
        elif reports:
            payload = [json.loads(report.to_json()) for report in reports]
            sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        for report in reports:
            counts = report.counts
            print(
                f"{report.input}: V={counts.V} E={counts.E} F={counts.F} "
                f"s={report.components} b={_show(report.boundary_cycles)} "
                f"g={_show(report.genus)} chi={report.euler_characteristic} "
                f"betti={' '.join(str(b) for b in report.betti)} "
                f"manifold={report.manifold} orientable={report.orientable} "
                f"watertight={report.watertight}"
            )
            if report.cutgraph is not None:
                print(f"  cut graph: {report.cutgraph.loops} loops, {report.cutgraph.B_size} edges")

    if args.csv:
        CSVWriter().write_summary(
            args.csv, reports, [(r.input_id, r.error_message or "") for r in failed]
        )

    return EXIT_ERROR if failed else EXIT_OK


def cmd_validate(args, controller: AnalysisController, settings: MeshturaSettings) -> int:
    input_id, mesh, _ = controller.resolve(_single_source(args))
    report = controller.validator.validate(mesh)

    print(f"{input_id}: {report.overall_status.value}")
    print(f"  edge_manifold: {report.edge_manifold} {report.non_manifold_edges}")
    print(f"  vertex_links_connected: {report.vertex_links_connected} {report.non_manifold_vertices}")
    print(f"  faces_simple: {report.faces_simple} {report.non_simple_faces}")
    reliability = "" if report.orientation_reliable else " (unreliable)"
    print(f"  orientable: {report.orientable}{reliability} witness={_show(report.orientation_witness)}")
    print(f"  watertight: {report.watertight}")
    for bowtie in report.boundary_bowtie_vertices:
        verdict = "acceptable" if bowtie.acceptable else "unacceptable"
        print(f"  bow-tie vertex {bowtie.vertex}: {bowtie.boundary_edge_count} boundary edges, {verdict}")
    if report.isolated_vertices:
        print(f"  isolated vertices: {report.isolated_vertices}")
    for issue in report.issues:
        print(f"  [{issue.severity.value}] {issue.check}: {issue.message}")

    return EXIT_OK if report.manifold and report.orientable else EXIT_INVALID


def cmd_betti(args, controller: AnalysisController, settings: MeshturaSettings) -> int:
    _, mesh, _ = controller.resolve(_single_source(args))
    seed = settings.default_seed if args.seed is None else args.seed
    trials = settings.default_trials if args.trials is None else args.trials
    if trials < 1:
        raise MeshturaError("--trials must be at least 1")

    if BettiMethod(args.method) == BettiMethod.CLOSED_FORM:
        print(" ".join(str(b) for b in betti_closed_form(mesh)))
        return EXIT_OK

    comparison = compare_betti(mesh, seed, trials)
    print(" ".join(str(b) for b in comparison.incremental[0]))
    print(f"agree: {comparison.agreeing}/{len(comparison.incremental)}")
    if not comparison.all_agree:
        for k, result in enumerate(comparison.incremental):
            if result != comparison.closed_form:
                print(
                    f"seed {seed + k}: {' '.join(map(str, result))} "
                    f"!= closed form {' '.join(map(str, comparison.closed_form))}",
                    file=sys.stderr,
                )
        return EXIT_DISAGREE
    return EXIT_OK


def _component_cut_graphs(mesh: Mesh, args, settings: MeshturaSettings) -> List[CutGraph]:
    return build_cut_graphs(mesh, _weighting(args, settings), args.root)


def cmd_cutgraph(args, controller: AnalysisController, settings: MeshturaSettings) -> int:
    _, mesh, _ = controller.resolve(_single_source(args))
    cut_graphs = _component_cut_graphs(mesh, args, settings)

    seams = ElementSet.empty(Dimension.EDGE)
    for cg in cut_graphs:
        summary = cg.summary()
        print(f"root {summary.root}: {summary.loops} loops")
        print(f"  loop lengths: {' '.join(str(n) for n in summary.loop_lengths) or '-'}")
        print(f"  B: {summary.cut_edge_count} edges")
        if summary.puncture_edge is not None:
            print(f"  puncture edge: {summary.puncture_edge}")
        seams = seams.union(cg.cut_set())

    if args.obj:
        args.obj.write_bytes(write_obj(mesh, seams))
        print(f"wrote {args.obj}")
    return EXIT_OK


def _surface_numbers(mesh: Mesh) -> Tuple[int, str, str]:
    s, _ = components(mesh)
    try:
        b = str(boundary_cycles(mesh)[0])
    except NonManifoldBoundaryError:
        b = "undefined"
    try:
        g = str(genus(mesh))
    except GenusUndefinedError:
        g = "undefined"
    return s, g, b


def cmd_cut(args, controller: AnalysisController, settings: MeshturaSettings) -> int:
    _, mesh, _ = controller.resolve(_single_source(args))
    cut_graphs = _component_cut_graphs(mesh, args, settings)

    cut_set = ElementSet.empty(Dimension.EDGE)
    for cg in cut_graphs:
        cut_set = cut_set.union(cg.cut_set())

    result = cut_mesh(mesh, cut_set)
    args.obj.write_bytes(write_obj(result))

    s, g, b = _surface_numbers(result)
    print(f"s={s} g={g} b={b}")
    return EXIT_OK


COMMANDS = {
    "info": cmd_info,
    "validate": cmd_validate,
    "betti": cmd_betti,
    "cutgraph": cmd_cutgraph,
    "cut": cmd_cut,
}


def _show(value) -> str:
    return "undefined" if value is None else str(value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the meshtura command."""
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = MeshturaSettings()
    _configure_logging(settings, args.verbose)

    # Only info produces analysis records
    audit_dir = None
    if args.command == "info":
        audit_dir = args.audit_dir or settings.audit_dir
    controller = AnalysisController(audit_dir=audit_dir)

    try:
        return COMMANDS[args.command](args, controller, settings)
    except (MeshturaError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
