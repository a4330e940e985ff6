import random
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

import frhyper as fh
from frhyper import cli
import helpers
from test_model import fr_codes

DATA = Path(__file__).parent / "data"

HETERO_TEXT = "FRC 1\nfr 5 6\n1 2 3 4\n1 5 6\n2 5\n3 6\n4 6\n"


class TestParse:
    def test_hetero_fixture(self):
        doc = fh.parse_frc((DATA / "hetero5.frc").read_text())
        assert doc.kind == "fr"
        assert doc.body.alpha_vec == (4, 3, 2, 2, 2)

    def test_single_node(self):
        doc = fh.parse_frc("FRC 1\nfr 1 1\n1\n")
        assert doc.body.nodes == (frozenset({1}),)

    def test_duplicate_id_is_a_grammar_error(self):
        with pytest.raises(fh.ParseError) as exc:
            fh.parse_frc("FRC 1\nfr 2 2\n1 1\n2\n")
        assert exc.value.line == 3

    def test_bad_header(self):
        with pytest.raises(fh.ParseError) as exc:
            fh.parse_frc("FRX 1\nfr 1 1\n1\n")
        assert exc.value.line == 1

    def test_wrong_line_count(self):
        with pytest.raises(fh.ParseError):
            fh.parse_frc("FRC 1\nfr 3 3\n1 2\n3\n")

    def test_semantic_error_is_not_a_parse_error(self):
        with pytest.raises(fh.OrphanPacketError):
            fh.parse_frc("FRC 1\nfr 2 3\n1 2\n2\n")

    def test_comments_survive_round_trip(self):
        text = "FRC 1\n# storage layout A\nfr 1 1\n1\n"
        doc = fh.parse_frc(text)
        assert doc.comments == ("storage layout A",)
        assert fh.parse_frc(fh.serialize_frc(doc)) == doc

    def test_hypergraph_fixture(self):
        doc = fh.parse_frc((DATA / "worked5.frc").read_text())
        assert doc.kind == "hg"
        assert doc.body.num_vertices == 5
        assert doc.body.num_edges == 4

    def test_serialize_is_canonical(self):
        code = fh.validate_fr([{4, 2, 6, 5}, {1, 3}], theta=6)
        text = fh.serialize_frc(fh.FrcDocument(body=code))
        assert text == "FRC 1\nfr 2 6\n2 4 5 6\n1 3\n"

    @given(fr_codes())
    def test_round_trip_identity(self, code):
        doc = fh.FrcDocument(body=code)
        assert fh.parse_frc(fh.serialize_frc(doc)) == doc

    @given(fr_codes())
    def test_hypergraph_round_trip_identity(self, code):
        doc = fh.FrcDocument(body=fh.fr_to_hypergraph(code))
        assert fh.parse_frc(fh.serialize_frc(doc)) == doc


class TestCsv:
    def test_hetero_rows(self, hetero):
        assert fh.emit_filesize_csv(hetero) == (
            "k,M_k,ug_lower_bound,upper_bound\n"
            "1,2,2,4\n"
            "2,3,3,7\n"
            "3,5,3,9\n"
            "4,6,3,11\n"
            "5,6,3,13\n"
        )

    def test_single_node(self):
        code = fh.validate_fr([{1}], theta=1)
        assert fh.emit_filesize_csv(code) == "k,M_k,ug_lower_bound,upper_bound\n1,1,1,1\n"

    def test_k4_file_size_column(self, k4):
        rows = fh.emit_filesize_csv(k4).strip().split("\n")[1:]
        assert [int(r.split(",")[1]) for r in rows] == [3, 5, 6, 6]

    def test_deterministic(self, hetero):
        assert fh.emit_filesize_csv(hetero) == fh.emit_filesize_csv(hetero)

    def test_matches_union_oracle(self):
        rng = random.Random(31)
        for _ in range(40):
            code = helpers.random_code(rng, max_n=6, max_theta=8)
            rows = fh.emit_filesize_csv(code).strip().split("\n")[1:]
            for row in rows:
                k, mk, lower, upper = (int(x) for x in row.split(","))
                assert mk == helpers.oracle_max_file_size(
                    [set(u) for u in code.nodes], k
                )
                assert mk <= upper


class TestCliExitCodes:
    def test_validate_ok(self, capsys):
        assert cli.main(["validate", str(DATA / "hetero5.frc")]) == 0
        out = capsys.readouterr().out
        assert "alpha = [4, 3, 2, 2, 2]" in out

    def test_corrupted_fixtures_exit_2(self):
        for name in ("bad_header.frc", "not_ascending.frc", "wrong_count.frc"):
            assert cli.main(["validate", str(DATA / name)]) == 2

    def test_semantic_failure_exits_1(self):
        assert cli.main(["validate", str(DATA / "orphan.frc")]) == 1

    def test_guard_exits_3(self, tmp_path, capsys):
        lines = ["FRC 1", "fr 29 29"] + [str(i) for i in range(1, 30)]
        path = tmp_path / "big.frc"
        path.write_text("\n".join(lines) + "\n")
        assert cli.main(["csv", str(path), "--k-range", "2..2"]) == 3
        assert cli.main(["csv", str(path), "--k-range", "2..2", "--force"]) == 0
        assert capsys.readouterr().out.endswith("2,2,1,2\n")

    def test_guard_env_override(self, tmp_path, monkeypatch, capsys):
        lines = ["FRC 1", "fr 29 29"] + [str(i) for i in range(1, 30)]
        path = tmp_path / "big.frc"
        path.write_text("\n".join(lines) + "\n")
        monkeypatch.setenv("FRC_GUARD_OVERRIDE", "1")
        assert cli.main(["csv", str(path), "--k-range", "2..2"]) == 0

    def test_bounds_ok_on_linear_code(self):
        assert cli.main(["bounds", str(DATA / "k4.frc"), "--k", "2"]) == 0

    def test_bounds_reports_gates_not_violations(self, tmp_path, capsys):
        path = tmp_path / "nonlinear.frc"
        path.write_text("FRC 1\nfr 2 2\n1 2\n1 2\n")
        assert cli.main(["bounds", str(path)]) == 0
        out = capsys.readouterr().out
        assert "not linear" in out


class TestCliCommands:
    def test_analyze(self, capsys):
        assert cli.main(["analyze", str(DATA / "hetero5.frc"), "--k", "3"]) == 0
        out = capsys.readouterr().out
        assert "file size M = 5" in out
        assert "reconstruction degree k = 3" in out
        assert "max repair degree d = 4" in out
        assert "min distance d_min = 3" in out

    def test_classify(self, capsys):
        assert cli.main(["classify", str(DATA / "k4.frc")]) == 0
        out = capsys.readouterr().out
        assert "linear       = True" in out
        assert "universally good = True" in out

    def test_dual_round_trip(self, capsys):
        assert cli.main(["dual", str(DATA / "worked5.frc")]) == 0
        out = capsys.readouterr().out
        assert out == "FRC 1\nhg 4 5\n1\n3\n1 2\n1 2 3\n4\n"

    def test_convert_to_hypergraph(self, capsys):
        assert cli.main(["convert", str(DATA / "k4.frc"), "--to", "hypergraph"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("FRC 1\nhg 4 6\n")

    def test_convert_isolated_vertex_fails(self):
        assert cli.main(["convert", str(DATA / "isolated.frc"), "--to", "fr"]) == 1

    def test_construct_trace(self, capsys):
        code = cli.main(
            ["construct", "--n", "4", "--rho-min", "2", "--theta", "6", "--trace"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "step 1: initial" in out
        assert "fr 4 6" in out

    def test_adapt(self, capsys):
        rc = cli.main([
            "adapt", str(DATA / "k4.frc"),
            "--remove-nodes", "4", "--remove-packets", "3,5,6",
        ])
        assert rc == 0
        out = capsys.readouterr().out
        assert out == "FRC 1\nfr 3 3\n1 2\n1 3\n2 3\n"

    def test_adapt_inadmissible(self):
        rc = cli.main([
            "adapt", str(DATA / "k4.frc"),
            "--remove-nodes", "", "--remove-packets", "1,2,3",
        ])
        assert rc == 1

    def test_csv_k_range(self, capsys):
        assert cli.main(["csv", str(DATA / "hetero5.frc"), "--k-range", "2..3"]) == 0
        out = capsys.readouterr().out
        assert out == "k,M_k,ug_lower_bound,upper_bound\n2,3,3,7\n3,5,3,9\n"

    def test_stdin(self, monkeypatch, capsys):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(HETERO_TEXT))
        assert cli.main(["validate", "-"]) == 0

    def test_bounds_with_pairing(self, capsys):
        rc = cli.main(["bounds", str(DATA / "k4.frc"), "--pairing", "1:6,2:5,3:4"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "packet-pairing" in out
        assert "1/2" in out

    def test_missing_file(self):
        assert cli.main(["validate", "/nonexistent/x.frc"]) == 1

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "frhyper.cli", "validate", str(DATA / "hetero5.frc")],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "valid fr code" in proc.stdout
