"""Command-line interface: outputs, exports, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from pillowdeg.checks import Report
from pillowdeg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCharacters:
    def test_k3_g9_text(self, capsys):
        code, out, _ = run_cli(capsys, "characters", "--family", "k3", "--g", "9")
        assert code == 0
        assert "b=48 n=840 k=168 t=72" in out
        assert out.count("PASS") == 4

    def test_veronese_r1_all_zero(self, capsys):
        code, out, _ = run_cli(capsys, "characters", "--family", "veronese", "--r", "1")
        assert code == 0
        assert "b=0 n=0 k=0 t=0" in out

    def test_custom_equals_veronese_r2(self, capsys):
        code1, out1, _ = run_cli(capsys, "characters", "--family", "veronese",
                                 "--r", "2", "--format", "json")
        code2, out2, _ = run_cli(capsys, "characters", "--family", "custom",
                                 "--d", "4", "--kh", "-6", "--k2", "9", "--euler", "3",
                                 "--format", "json")
        assert code1 == code2 == 0
        doc1, doc2 = json.loads(out1), json.loads(out2)
        assert doc1["characters"] == doc2["characters"]
        assert doc1["checks"] == doc2["checks"]
        surface1 = {k: v for k, v in doc1["surface"].items() if k != "label"}
        surface2 = {k: v for k, v in doc2["surface"].items() if k != "label"}
        assert surface1 == surface2

    def test_json_payload_shape(self, capsys):
        code, out, _ = run_cli(capsys, "characters", "--family", "delpezzo",
                               "--deg", "6", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["characters"] == {
            "degree": 12, "nodes": 24, "cusps": 24, "turning_points": 12,
        }
        assert doc["all_passed"] is True
        assert doc["exit_code"] == 0

    @pytest.mark.parametrize("argv", [
        ("characters", "--family", "veronese"),            # missing --r
        ("characters", "--family", "k3"),                  # missing --g
        ("characters", "--family", "custom", "--d", "4"),  # missing the rest
        ("characters", "--family", "delpezzo", "--deg", "10"),
        ("characters", "--family", "k3", "--g", "2"),
        ("characters", "--family", "nope", "--r", "2"),    # argparse choice
    ])
    def test_invalid_parameters_exit_2(self, capsys, argv):
        code, _, _ = run_cli(capsys, *argv)
        assert code == 2

    def test_custom_odd_branch_degree_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "characters", "--family", "custom",
                               "--d", "2", "--kh", "1", "--k2", "0", "--euler", "40")
        assert code == 2
        assert "odd" in err


class TestPillow:
    def test_verify_summary(self, capsys):
        code, out, _ = run_cli(capsys, "pillow", "--a", "2", "--b", "2", "--verify")
        assert code == 0
        assert "V=10 E=24 F=16 g=9" in out
        assert "disjoint_pairs_brute_vs_formula: 174 == 174" in out
        assert "all checks passed" in out

    def test_invalid_parameters_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "pillow", "--a", "1", "--b", "5")
        assert code == 2
        assert ">= 2" in err

    def test_export_json_file(self, capsys, tmp_path):
        out_path = tmp_path / "p.json"
        code, out, _ = run_cli(capsys, "pillow", "--a", "2", "--b", "3",
                               "--export", "json", "--out", str(out_path))
        assert code == 0
        assert f"wrote {out_path}" in out
        doc = json.loads(out_path.read_text())
        assert doc["g"] == 13
        assert len(doc["lines"]) == 36
        assert len(doc["triangles"]) == 24

    def test_export_dot_file_has_triangle_nodes(self, capsys, tmp_path):
        out_path = tmp_path / "p33.dot"
        code, _, _ = run_cli(capsys, "pillow", "--a", "3", "--b", "3",
                             "--export", "dot", "--out", str(out_path))
        assert code == 0
        text = out_path.read_text()
        nodes = [ln for ln in text.splitlines()
                 if ln.endswith('";') and " -- " not in ln]
        assert len(nodes) == 36

    def test_export_dot_lines_graph(self, capsys):
        code, out, _ = run_cli(capsys, "pillow", "--a", "2", "--b", "2",
                               "--export", "dot", "--dot-graph", "lines")
        assert code == 0
        assert out.startswith("graph line_intersection {")
        nodes = [ln for ln in out.splitlines()
                 if ln.endswith('";') and " -- " not in ln]
        assert len(nodes) == 24

    def test_export_to_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "pillow", "--a", "2", "--b", "2",
                               "--export", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["a"] == 2 and doc["b"] == 2

    def test_json_format_with_export_stays_one_document(self, capsys):
        code, out, _ = run_cli(capsys, "pillow", "--a", "2", "--b", "2",
                               "--export", "dot", "--format", "json")
        assert code == 0
        doc = json.loads(out)  # would fail if two documents were interleaved
        assert doc["export"].startswith("graph face_adjacency {")

    def test_unwritable_out_exit_3(self, capsys, tmp_path):
        target = tmp_path / "missing_dir" / "x.json"
        code, _, err = run_cli(capsys, "pillow", "--a", "2", "--b", "2",
                               "--export", "json", "--out", str(target))
        assert code == 3
        assert "i/o error" in err


class TestTable:
    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--a", "2", "--b", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["Object", "Number", "Branch", "Nodes", "Cusps"]
        assert "Totals:" in out
        assert "840" in out and "168" in out and "72" in out

    def test_json_totals_g13(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--a", "2", "--b", "3",
                               "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["table"]["g"] == 13
        assert doc["table"]["totals"] == {"branch": 96, "nodes": 2112, "cusps": 264}
        assert doc["all_passed"] is True

    def test_invalid_parameters_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "table", "--a", "2", "--b", "0")
        assert code == 2

    def test_failed_checks_exit_1(self, capsys, monkeypatch):
        failing = Report("forced failure")
        failing.add("forced", 0, 1)
        monkeypatch.setattr("pillowdeg.degeneration.verify_conservation",
                            lambda c, table=None: failing)
        code, _, _ = run_cli(capsys, "table", "--a", "2", "--b", "2")
        assert code == 1


class TestVerify:
    def test_small_sweep(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--a", "2..3", "--b", "2..3")
        assert code == 0
        assert "families" in out
        assert "configuration (2, 2)" in out
        assert "configuration (3, 3)" in out
        assert out.strip().splitlines()[-1].startswith("overall: PASS")

    def test_single_configuration(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--a", "2..2", "--b", "2..2")
        assert code == 0
        assert "configuration (2, 2)" in out
        assert "configuration (2, 3)" not in out

    @pytest.mark.parametrize("a_range", ["3..2", "x..y", "", "2..9"])
    def test_bad_ranges_exit_2(self, capsys, a_range):
        code, _, _ = run_cli(capsys, "verify", "--a", a_range, "--b", "2..2")
        assert code == 2

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--a", "2..2", "--b", "2..2",
                               "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["configurations"] == 1
        assert doc["all_passed"] is True


class TestExitCodeContract:
    """Exit code 0 iff every check passed; 2 on usage; 3 on I/O failure."""

    def test_no_subcommand_exit_2(self, capsys):
        code, _, _ = run_cli(capsys)
        assert code == 2

    def test_unknown_flag_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "table", "--a", "2", "--b", "2", "--nope")
        assert code == 2

    def test_fixture_of_invocations(self, capsys, tmp_path):
        fixture = [
            (("characters", "--family", "scroll", "--r", "3"), 0),
            (("characters", "--family", "scroll", "--r", "0"), 2),
            (("pillow", "--a", "2", "--b", "2"), 0),
            (("pillow", "--a", "0", "--b", "2"), 2),
            (("table", "--a", "3", "--b", "2"), 0),
            (("verify", "--a", "2", "--b", "2"), 0),
            (("verify", "--a", "2..1", "--b", "2"), 2),
        ]
        for argv, expected in fixture:
            code, _, _ = run_cli(capsys, *argv)
            assert code == expected, argv


class TestDeterminism:
    def test_table_json_byte_identical(self):
        cmd = [sys.executable, "-m", "pillowdeg", "table", "--a", "2", "--b", "2",
               "--format", "json"]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert first.stdout.endswith(b"\n")

    def test_pillow_json_export_byte_identical(self, capsys):
        code1, out1, _ = run_cli(capsys, "pillow", "--a", "3", "--b", "2",
                                 "--export", "json")
        code2, out2, _ = run_cli(capsys, "pillow", "--a", "3", "--b", "2",
                                 "--export", "json")
        assert code1 == code2 == 0
        assert out1 == out2
