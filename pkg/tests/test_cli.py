import io
import json
import sys

import pytest

from domcycle import zoo
from domcycle.cli import main
from domcycle.enumeration import read_graph6, write_graph6
from domcycle.graphs import Graph
from domcycle.iso import are_isomorphic


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestGenAndNamed:
    def test_gen_frozen_output(self, capsys):
        rc, out, _ = run_cli(capsys, "gen", "--family", "A5", "--s", "3")
        assert rc == 0
        assert out == "Gr`KAC\n"

    def test_named_frozen_outputs(self, capsys):
        for argv, expected in [
            (("named", "--graph", "W"), "F{eCG"),
            (("named", "--graph", "K13"), "Cs"),
            (("named", "--graph", "K4m"), "C}"),
            (("named", "--graph", "P", "--n", "4"), "Ch"),
            (("named", "--graph", "B", "--m", "1", "--n", "2"), "E{OG"),
        ]:
            rc, out, _ = run_cli(capsys, *argv)
            assert rc == 0 and out == expected + "\n"

    def test_gen_fsst(self, capsys):
        rc, out, _ = run_cli(
            capsys, "gen", "--family", "Fsst", "--s", "3", "--sp", "3", "--t", "1"
        )
        assert rc == 0
        assert are_isomorphic(
            read_graph6(out.strip()), zoo.make_family("Fsst", 3, sp=3, t=1)
        )

    def test_gen_sporadic_needs_no_s(self, capsys):
        rc, out, _ = run_cli(capsys, "gen", "--family", "F1")
        assert rc == 0
        assert are_isomorphic(read_graph6(out.strip()), zoo.sporadic(1))

    def test_gen_below_minimum_is_usage_error(self, capsys):
        rc, _, err = run_cli(capsys, "gen", "--family", "A2", "--s", "2")
        assert rc == 64
        assert "error" in err

    def test_named_missing_parameter(self, capsys):
        rc, _, err = run_cli(capsys, "named", "--graph", "Z")
        assert rc == 64
        assert "--n" in err

    def test_unknown_family_choice(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--family", "A9", "--s", "3"])
        assert exc.value.code == 64

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 64


class TestFree:
    def test_named_set_true_false(self, capsys, monkeypatch, tmp_path):
        f1 = write_graph6(zoo.sporadic(1))
        claw = write_graph6(zoo.claw())
        monkeypatch.setattr(sys, "stdin", io.StringIO(f"{f1}\n{claw}\n"))
        rc, out, _ = run_cli(capsys, "free", "--set", "H1", "--in", "-")
        assert rc == 0
        assert out.splitlines() == ["true", "false"]

    def test_custom_graphs_file(self, capsys, tmp_path):
        forb = tmp_path / "forb.g6"
        forb.write_text(write_graph6(zoo.claw()) + "\n")
        inp = tmp_path / "in.g6"
        inp.write_text(
            write_graph6(zoo.path(5)) + "\n" + write_graph6(zoo.claw()) + "\n"
        )
        rc, out, _ = run_cli(capsys, "free", "--graphs-file", str(forb), "--in", str(inp))
        assert rc == 0
        assert out.splitlines() == ["true", "false"]

    def test_empty_graphs_file(self, capsys, tmp_path):
        forb = tmp_path / "forb.g6"
        forb.write_text("\n")
        inp = tmp_path / "in.g6"
        inp.write_text(write_graph6(zoo.path(3)) + "\n")
        rc, _, err = run_cli(capsys, "free", "--graphs-file", str(forb), "--in", str(inp))
        assert rc == 64
        assert "no graphs" in err

    def test_set_and_file_conflict(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["free", "--set", "H1", "--graphs-file", "x", "--in", "-"])
        assert exc.value.code == 64


class TestCycle:
    def test_longest_on_cycle_graph(self, capsys, monkeypatch):
        c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(c5) + "\n"))
        rc, out, _ = run_cli(capsys, "cycle", "--mode", "longest", "--in", "-")
        assert rc == 0
        parts = out.split()
        assert parts[0] == "5" and sorted(map(int, parts[1:])) == [0, 1, 2, 3, 4]

    def test_hamilton_none_on_k23(self, capsys, monkeypatch):
        k23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(k23) + "\n"))
        rc, out, _ = run_cli(capsys, "cycle", "--mode", "hamilton", "--in", "-")
        assert rc == 0 and out == "none\n"

    def test_dominating_none_on_family_member(self, capsys, monkeypatch, tmp_path):
        rc, out, _ = run_cli(capsys, "gen", "--family", "A1", "--s", "4")
        monkeypatch.setattr(sys, "stdin", io.StringIO(out))
        rc, out, _ = run_cli(capsys, "cycle", "--mode", "dominating", "--in", "-")
        assert rc == 0 and out == "none\n"

    def test_all_longest_dominating_false_with_witness(self, capsys, monkeypatch):
        theta = zoo.make_family("A", 2)
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(theta) + "\n"))
        rc, out, _ = run_cli(
            capsys, "cycle", "--mode", "all-longest-dominating", "--in", "-"
        )
        assert rc == 0
        assert out.startswith("false ")
        witness = tuple(int(v) for v in out.split()[1:])
        assert len(witness) >= 3  # a concrete non-dominating longest cycle

    def test_all_longest_dominating_true(self, capsys, monkeypatch):
        k4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(k4) + "\n"))
        rc, out, _ = run_cli(
            capsys, "cycle", "--mode", "all-longest-dominating", "--in", "-"
        )
        assert rc == 0 and out == "true\n"


class TestClosure:
    def test_closure_of_sparse_family_member(self, capsys, monkeypatch):
        g = zoo.make_family("A3", 4)
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(g) + "\n"))
        rc, out, err = run_cli(capsys, "closure", "--in", "-", "--trace")
        assert rc == 0
        assert are_isomorphic(read_graph6(out.strip()), zoo.make_family("A2", 4))
        assert "completed neighborhood of" in err

    def test_closed_graph_quiet_trace(self, capsys, monkeypatch):
        c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(c6) + "\n"))
        rc, out, err = run_cli(capsys, "closure", "--in", "-", "--trace")
        assert rc == 0
        assert out.strip() == write_graph6(c6)
        assert err == ""

    def test_not_claw_free_is_data_error(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(write_graph6(zoo.claw()) + "\n"))
        rc, _, err = run_cli(capsys, "closure", "--in", "-")
        assert rc == 65
        assert "claw" in err


class TestVerifyCommand:
    def test_report_file_and_exit_zero(self, capsys, tmp_path):
        report_path = tmp_path / "report.json"
        rc, out, err = run_cli(
            capsys,
            "verify", "--theorem", "LEM10", "--nmax", "5", "--report", str(report_path),
        )
        assert rc == 0
        assert "verified" in out
        data = json.loads(report_path.read_text())
        assert data["theorem"] == "LEM10" and data["status"] == "verified"
        assert str(report_path) in err

    def test_families_uses_smax(self, capsys):
        rc, out, _ = run_cli(
            capsys, "verify", "--theorem", "THM4-FAMILIES", "--smax", "3"
        )
        assert rc == 0
        assert "scanned 10" in out.replace("=", " ").replace(":", " ")

    def test_necessity_scan_id(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--theorem", "NECESSITY-SCAN")
        assert rc == 0 and "NECESSITY-SCAN" in out

    def test_unknown_theorem_choice(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--theorem", "THM99"])
        assert exc.value.code == 64


class TestConvert:
    def test_roundtrip_byte_identical(self, capsys, tmp_path):
        graphs = [
            zoo.make_family("A", 2),
            zoo.claw(),
            zoo.sporadic(4),
            Graph.from_edges(1, []),
        ]
        g6 = tmp_path / "in.g6"
        g6.write_text("".join(write_graph6(g) + "\n" for g in graphs))
        el = tmp_path / "mid.txt"
        back = tmp_path / "back.g6"
        rc1, _, err1 = run_cli(capsys, "convert", "--in", str(g6), "--out", str(el))
        rc2, _, err2 = run_cli(capsys, "convert", "--in", str(el), "--out", str(back))
        assert rc1 == rc2 == 0
        assert "4 graph(s)" in err1 and "4 graph(s)" in err2
        assert back.read_text() == g6.read_text()

    def test_edge_list_comments_and_blanks(self, capsys, tmp_path):
        el = tmp_path / "in.edges"
        el.write_text("# triangle\n3 3\n0 1\n1 2\n0 2\n\n# single vertex\n1 0\n")
        out = tmp_path / "out.g6"
        rc, _, _ = run_cli(capsys, "convert", "--in", str(el), "--out", str(out))
        assert rc == 0
        assert out.read_text() == "Bw\n@\n"

    def test_unknown_extension(self, capsys, tmp_path):
        rc, _, err = run_cli(
            capsys, "convert", "--in", str(tmp_path / "a.xyz"), "--out", str(tmp_path / "b.g6")
        )
        assert rc == 64
        assert "cannot infer format" in err

    def test_malformed_edge_list(self, capsys, tmp_path):
        el = tmp_path / "bad.txt"
        el.write_text("3 5\n0 1\n")
        rc, _, err = run_cli(capsys, "convert", "--in", str(el), "--out", str(el.with_suffix(".g6")))
        assert rc == 65
        assert "malformed edge list" in err


class TestDataErrors:
    def test_bad_graph6_line_number(self, capsys, tmp_path):
        bad = tmp_path / "bad.g6"
        bad.write_text("Bw\n\x19@\n")
        rc, _, err = run_cli(capsys, "cycle", "--mode", "longest", "--in", str(bad))
        assert rc == 65
        assert f"{bad}:2:" in err

    def test_missing_file(self, capsys, tmp_path):
        rc, _, err = run_cli(
            capsys, "free", "--set", "H1", "--in", str(tmp_path / "nope.g6")
        )
        assert rc == 65
