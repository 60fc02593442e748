"""
Tests for the meshtura command line.

Run with: pytest
"""

import csv
import json

import pytest

from meshtura.app.main import EXIT_ERROR, EXIT_INVALID, EXIT_OK, main
from meshtura.core.obj_format import parse_obj, write_obj
from meshtura.core.topology import boundary_cycles
from meshtura.generators import generate


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """Run every command without MESHTURA_ settings from the host."""
    for name in ("MESHTURA_AUDIT_DIR", "MESHTURA_DEFAULT_SEED", "MESHTURA_DEFAULT_TRIALS"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def torus_file(tmp_path):
    path = tmp_path / "torus.obj"
    path.write_bytes(write_obj(generate("torus_grid:3,3")))
    return path


class TestInfo:
    """Test the info command."""

    def test_json_report(self, capsys):
        """Test the JSON report of a generated torus."""
        assert main(["info", "--gen", "torus_grid:3,3", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["input"] == "torus_grid:3,3"
        assert data["genus"] == 1
        assert data["partition"] == {"VN": 0, "VC": 9, "EN": 8, "EC": 10, "FN": 8, "FC": 1}

    def test_json_deterministic(self, capsys):
        """Test two runs print byte-identical JSON."""
        main(["info", "--gen", "genus_g:2", "--json"])
        first = capsys.readouterr().out
        main(["info", "--gen", "genus_g:2", "--json"])
        assert capsys.readouterr().out == first

    def test_file_input(self, torus_file, capsys):
        """Test reading an OBJ file."""
        assert main(["info", str(torus_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "V=9 E=18 F=9" in out
        assert "betti=1 2 1" in out

    def test_several_inputs(self, torus_file, capsys):
        """Test several inputs give a JSON list in input order."""
        assert main(["info", str(torus_file), "--gen", "cube", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert [entry["input"] for entry in data] == ["cube", str(torus_file)]

    def test_csv_summary(self, tmp_path, capsys):
        """Test the CSV summary has one row per input."""
        out = tmp_path / "summary.csv"
        assert main(["info", "--gen", "cube", "--gen", "moebius", "--csv", str(out)]) == EXIT_OK
        with open(out, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        assert [row["input"] for row in rows] == ["cube", "moebius"]
        assert rows[1]["orientable"] == "False"

    def test_missing_file(self, tmp_path, capsys):
        """Test a missing file exits with an error."""
        assert main(["info", str(tmp_path / "nope.obj")]) == EXIT_ERROR
        assert "error" in capsys.readouterr().err

    def test_no_cutgraph(self, capsys):
        """Test the cut graph section can be skipped."""
        main(["info", "--gen", "torus_grid:3,3", "--json", "--no-cutgraph"])
        assert "cutgraph" not in json.loads(capsys.readouterr().out)


class TestValidate:
    """Test the validate command."""

    def test_valid_mesh(self, capsys):
        """Test a torus passes."""
        assert main(["validate", "--gen", "torus_grid:3,3"]) == EXIT_OK
        assert "passed" in capsys.readouterr().out

    def test_pinched_vertex(self, capsys):
        """Test two tetrahedra on a vertex fail the vertex-link check."""
        assert main(["validate", "--gen", "two_tets_shared_vertex"]) == EXIT_INVALID
        assert "vertex_links_connected: False [0]" in capsys.readouterr().out

    def test_moebius(self, capsys):
        """Test the Moebius strip fails orientation."""
        assert main(["validate", "--gen", "moebius"]) == EXIT_INVALID
        assert "orientable: False" in capsys.readouterr().out

    def test_needs_one_input(self, torus_file, capsys):
        """Test a file and a generator together are rejected."""
        assert main(["validate", str(torus_file), "--gen", "cube"]) == EXIT_ERROR

    def test_parse_error(self, tmp_path, capsys):
        """Test parse errors exit 1 with the line number."""
        path = tmp_path / "bad.obj"
        path.write_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n")
        assert main(["validate", str(path)]) == EXIT_ERROR
        assert "line 4" in capsys.readouterr().err

    def test_unknown_extension(self, tmp_path, capsys):
        """Test unsupported formats exit 1."""
        path = tmp_path / "mesh.ply"
        path.write_text("ply\n")
        assert main(["validate", str(path)]) == EXIT_ERROR

    def test_bad_spec(self, capsys):
        """Test invalid generator specs exit 1."""
        assert main(["validate", "--gen", "torus_grid:2,2"]) == EXIT_ERROR


class TestBetti:
    """Test the betti command."""

    def test_closed_form(self, capsys):
        """Test the closed-form triple."""
        assert main(["betti", "--gen", "torus_grid:3,3"]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["1", "2", "1"]

    def test_incremental_agreement(self, capsys):
        """Test 100 filtrations agree with the closed form."""
        argv = ["betti", "--gen", "torus_grid:3,3", "--method", "incremental", "--trials", "100"]
        assert main(argv) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["1 2 1", "agree: 100/100"]

    def test_non_manifold_closed_form(self, capsys):
        """Test the closed form still answers for three triangles on an edge."""
        assert main(["betti", "--gen", "tri_fan_shared_edge"]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["1", "0", "0"]

    def test_non_manifold_incremental(self, capsys):
        """Test the incremental method refuses non-manifold input."""
        argv = ["betti", "--gen", "tri_fan_shared_edge", "--method", "incremental"]
        assert main(argv) == EXIT_ERROR


class TestCutGraph:
    """Test the cutgraph command."""

    def test_torus_loops(self, capsys):
        """Test a torus prints two loops."""
        assert main(["cutgraph", "--gen", "torus_grid:3,3"]) == EXIT_OK
        assert "root 0: 2 loops" in capsys.readouterr().out

    def test_sphere_puncture(self, capsys):
        """Test a sphere prints its puncture edge."""
        assert main(["cutgraph", "--gen", "cube"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "0 loops" in out
        assert "puncture edge: 0" in out

    def test_seam_obj(self, tmp_path, capsys):
        """Test the seam OBJ carries line elements."""
        out = tmp_path / "seams.obj"
        assert main(["cutgraph", "--gen", "torus_grid:4,4", "--root", "5", "--obj", str(out)]) == EXIT_OK
        assert "root 5: 2 loops" in capsys.readouterr().out
        assert any(line.startswith("l ") for line in out.read_text().splitlines())

    def test_open_mesh(self, capsys):
        """Test open meshes exit 1."""
        assert main(["cutgraph", "--gen", "cube_open"]) == EXIT_ERROR

    @pytest.mark.parametrize("command", ["info", "cutgraph"])
    def test_root_out_of_range(self, command, capsys):
        """Test info and cutgraph both reject a root outside the mesh."""
        assert main([command, "--gen", "torus_grid:3,3", "--root", "999"]) == EXIT_ERROR
        assert "out of range" in capsys.readouterr().err


class TestCut:
    """Test the cut command."""

    def test_torus_to_disc(self, tmp_path, capsys):
        """Test cutting a torus prints a disc and writes it."""
        out = tmp_path / "disc.obj"
        assert main(["cut", "--gen", "torus_grid:4,4", "--obj", str(out)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "s=1 g=0 b=1"
        assert boundary_cycles(parse_obj(out.read_bytes()))[0] == 1

    def test_genus_two_to_disc(self, tmp_path, capsys):
        """Test a genus-2 surface with a chosen root."""
        out = tmp_path / "disc.obj"
        assert main(["cut", "--gen", "genus_g:2", "--root", "9", "--obj", str(out)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "s=1 g=0 b=1"

    def test_sphere_file_is_disc(self, tmp_path, capsys):
        """Test the punctured cube file reads back with one boundary curve."""
        out = tmp_path / "disc.obj"
        assert main(["cut", "--gen", "cube", "--obj", str(out)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "s=1 g=0 b=1"
        disc = parse_obj(out.read_bytes())
        assert disc.counts == (9, 14, 6)
        assert boundary_cycles(disc)[0] == 1

    def test_requires_obj(self):
        """Test the output path is required."""
        with pytest.raises(SystemExit):
            main(["cut", "--gen", "cube"])


class TestAuditDir:
    """Test audit records from the command line."""

    def test_audit_records(self, tmp_path, capsys):
        """Test info writes audit records when asked."""
        audit = tmp_path / "audit"
        assert main(["info", "--gen", "cube", "--audit-dir", str(audit)]) == EXIT_OK
        assert (audit / "audit_index.jsonl").exists()

    @pytest.mark.parametrize("command", ["validate", "betti", "cutgraph"])
    def test_flag_only_on_info(self, command, tmp_path, capsys):
        """Test the other commands do not accept an audit directory."""
        with pytest.raises(SystemExit):
            main([command, "--gen", "cube", "--audit-dir", str(tmp_path / "audit")])

    def test_environment_ignored_outside_info(self, monkeypatch, tmp_path, capsys):
        """Test MESHTURA_AUDIT_DIR only affects info."""
        audit = tmp_path / "audit"
        monkeypatch.setenv("MESHTURA_AUDIT_DIR", str(audit))
        assert main(["validate", "--gen", "cube"]) == EXIT_OK
        assert not audit.exists()
        assert main(["info", "--gen", "cube"]) == EXIT_OK
        assert (audit / "audit_index.jsonl").exists()
