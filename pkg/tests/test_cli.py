"""Command-line interface: subcommands, exit codes, pipe composition."""

import json
import subprocess
import sys

import pytest

from signednut import classify, complete_nut, emit_signed, fowler, parse_signed
from signednut.cli import main

from conftest import complete, fixture_path


def run_cli(args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "signednut.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestClassify:
    def test_k4_nonsingular(self):
        code, out, err = run_cli(["classify"], "C~ 00\n")
        assert code == 0
        assert "nut=no" in out
        assert "nullity=0" in out

    def test_complete_nut_record(self):
        rec = emit_signed(complete_nut(1).result)
        code, out, _ = run_cli(["classify"], rec + "\n")
        assert code == 0
        assert "nut=yes" in out
        assert "class=proper" in out

    def test_json_output(self):
        code, out, _ = run_cli(["classify", "--json"], "C~ 00\n")
        payload = json.loads(out)
        assert payload["nullity"] == 0
        assert payload["record"] == "C~ 00"

    def test_underlying_only(self):
        rec = emit_signed(complete_nut(1).result)
        code, out, _ = run_cli(["classify", "--underlying-only"], rec + "\n")
        assert "nut=no" in out  # unsigned K5 is nonsingular

    def test_malformed_line_exit_2(self):
        code, out, err = run_cli(["classify"], "notgraph6!!\n")
        assert code == 2
        assert "error" in err

    def test_comments_and_blanks_skipped(self):
        code, out, _ = run_cli(["classify"], "# header\n\nC~ 00\n")
        assert code == 0
        assert out.count("\n") == 1


class TestSearch:
    def test_k5_from_stdin(self):
        code, out, _ = run_cli(["search", "--json"], "D~{\n")
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "proper-only"
        assert payload["parameters"] == {"n": 5, "rho": 4}

    def test_text_output(self):
        code, out, _ = run_cli(["search"], "D~{\n")
        assert code == 0
        assert "verdict: proper-only" in out

    def test_capped_exit_3(self):
        code, out, _ = run_cli(["search", "--limit", "0"], "D~{\n")
        assert code == 3

    def test_bad_graph6_exit_2(self):
        code, _, err = run_cli(["search"], "!!\n")
        assert code == 2


class TestTable:
    def test_single_cell(self):
        code, out, _ = run_cli(
            ["table", "--cells", "(4,5)", "--fixtures", fixture_path(0, 0)[: -len("/reg/0/0.g6")]],
        )
        assert code == 0
        assert "✠" in out

    def test_missing_catalogue_not_attempted(self):
        code, out, _ = run_cli(["table", "--cells", "(9,99)"])
        assert code == 0
        assert "·" in out

    def test_json_cells(self):
        fixtures = fixture_path(0, 0)[: -len("/reg/0/0.g6")]
        code, out, _ = run_cli(
            ["table", "--cells", "(4,5),(4,6)", "--fixtures", fixtures, "--json"]
        )
        payload = json.loads(out)
        verdicts = {(c["rho"], c["n"]): c["verdict"] for c in payload["cells"]}
        assert verdicts == {(4, 5): "✠", (4, 6): "✗"}

    def test_malformed_cells_exit_2(self):
        code, _, err = run_cli(["table", "--cells", "(1,2,3)"])
        assert code == 2


class TestConstructions:
    def test_complete_nut_emits_record(self):
        code, out, _ = run_cli(["complete-nut", "--k", "1"])
        assert code == 0
        g = parse_signed(out.strip())
        assert g.order == 5
        assert classify(g).is_nut

    def test_fowler_pipe(self):
        _, rec, _ = run_cli(["complete-nut", "--k", "1"])
        code, out, _ = run_cli(["fowler", "--pivot", "0"], rec)
        assert code == 0
        g = parse_signed(out.strip())
        assert g.order == 13
        assert set(g.degrees()) == {4}
        r = classify(g)
        assert r.is_nut and r.signed_class == "proper"

    def test_pipe_matches_in_process(self):
        _, rec, _ = run_cli(["complete-nut", "--k", "1"])
        _, out, _ = run_cli(["fowler", "--pivot", "0"], rec)
        direct = emit_signed(fowler(complete_nut(1).result, 0).result)
        assert out.strip() == direct

    def test_bad_pivot_exit_2(self):
        _, rec, _ = run_cli(["complete-nut", "--k", "1"])
        code, _, err = run_cli(["fowler", "--pivot", "99"], rec)
        assert code == 2

    def test_bad_k_exit_2(self):
        code, _, _ = run_cli(["complete-nut", "--k", "0"])
        assert code == 2


class TestSwitchCanonicalKernel:
    def test_switch_empty_is_identity(self):
        rec = emit_signed(complete_nut(1).result)
        code, out, _ = run_cli(["switch", "--at", ""], rec)
        assert code == 0
        assert out.strip() == rec

    def test_switch_at_vertices(self):
        rec = emit_signed(complete_nut(1).result)
        _, out, _ = run_cli(["switch", "--at", "1,4"], rec)
        expected = emit_signed(complete_nut(1).result.switch({1, 4}))
        assert out.strip() == expected

    def test_canonical(self):
        rec = emit_signed(complete_nut(1).result)
        code, out, _ = run_cli(["canonical"], rec)
        assert code == 0
        g = parse_signed(out.strip())
        assert classify(g).kernel_vector == (1, 1, 1, 1, 1)

    def test_kernel(self):
        rec = emit_signed(complete_nut(1).result)
        code, out, _ = run_cli(["kernel"], rec)
        assert code == 0
        # one basis vector, proportional to the canonical eigenvector
        from fractions import Fraction

        from signednut.linalg import normalize_integer_vector

        rows = out.strip().split("\n")
        assert len(rows) == 1
        vec = tuple(Fraction(t) for t in rows[0].split())
        assert normalize_integer_vector(vec) == (1, -1, 1, 1, -1)

    def test_kernel_fullify(self):
        code, out, _ = run_cli(["kernel", "--fullify"], "Cr\n")  # C4 as graph6
        assert code == 0
        rows = [line.split() for line in out.strip().split("\n")]
        assert len(rows) == 2
        for row in rows:
            assert all(v != "0" for v in row)

    def test_multiple_records_rejected(self):
        code, _, err = run_cli(["switch", "--at", ""], "C~ 00\nC~ 00\n")
        assert code == 2


class TestInProcessMain:
    def test_main_returns_exit_code(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "in.txt"
        path.write_text("C~ 00\n")
        assert main(["classify", str(path)]) == 0
        captured = capsys.readouterr()
        assert "nullity=0" in captured.out

    def test_determinism(self, capsys):
        main(["complete-nut", "--k", "2"])
        first = capsys.readouterr().out
        main(["complete-nut", "--k", "2"])
        assert capsys.readouterr().out == first
