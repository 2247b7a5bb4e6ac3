import pytest

from conftest import path_graph
from main import app
from mim import config
from mim.graph import format_graph, parse_graph, parse_matching
from mim.generator import GenConfig, gen_graph
from mim.oracle import star123


@pytest.fixture
def p7_file(write_file):
    return write_file("p7.txt", format_graph(path_graph(7)))


def run(capsys, *argv):
    status = app.run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


class TestDecompose:
    def test_p7(self, capsys, p7_file):
        status, out, err = run(capsys, "decompose", p7_file)
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "N(EP,k=7)"
        assert len(lines) == 8
        assert err == ""

    def test_two_k2(self, capsys, write_file):
        path = write_file("2k2.txt", "4 2\nB W B W\n0 1\n2 3\n")
        status, out, _ = run(capsys, "decompose", path)
        assert status == 0
        assert out.splitlines()[:2] == ["P(2)", "  KS(k=2)"]

    def test_dot(self, capsys, p7_file):
        status, out, _ = run(capsys, "decompose", "--dot", p7_file)
        assert status == 0
        assert out.startswith("digraph decomposition {")

    def test_monochromatic_edge(self, capsys, write_file):
        path = write_file("bad.txt", "2 1\nB B\n0 1\n")
        status, out, err = run(capsys, "decompose", path)
        assert status == 1
        assert out == ""
        assert "line 3" in err and "(0, 1)" in err

    def test_not_star123_free(self, capsys, write_file):
        path = write_file("star.txt", format_graph(star123()))
        status, out, err = run(capsys, "decompose", path)
        assert status == 2
        assert out == ""
        assert "{0 1 2 3 4 5 6}" in err


class TestSolve:
    def test_p7(self, capsys, p7_file):
        status, out, _ = run(capsys, "solve", p7_file)
        assert status == 0
        assert out == "size 2\n0 1\n4 3\n"

    def test_single_vertex(self, capsys, write_file):
        status, out, _ = run(capsys, "solve", write_file("one.txt", "1 0\nB\n"))
        assert status == 0
        assert out == "size 0\n"

    def test_verify_generated_instance(self, capsys, write_file):
        g = gen_graph(GenConfig.small(seed=16, target_n=16))
        status, out, err = run(capsys, "solve", "--verify", write_file("g.txt", format_graph(g)))
        assert status == 0
        assert len(parse_matching(out)) == int(out.split()[1])
        assert err == ""

    def test_verify_skips_the_oracle_above_its_guard(self, capsys, monkeypatch, p7_file):
        monkeypatch.setattr(config, "ORACLE_MAX_EDGES", 3)
        status, out, err = run(capsys, "solve", "--verify", p7_file)
        assert status == 0
        assert out.startswith("size 2")
        assert "oracle comparison skipped" in err

    def test_not_star123_free(self, capsys, write_file):
        status, _, err = run(capsys, "solve", write_file("star.txt", format_graph(star123())))
        assert status == 2
        assert err.startswith("error: graph is not Star123-free")


class TestCheck:
    def test_valid(self, capsys, p7_file, write_file):
        status, out, _ = run(capsys, "check", p7_file, write_file("m.txt", "size 2\n1 0\n3 4\n"))
        assert status == 0
        assert out == "valid\n"

    def test_connecting_edge(self, capsys, p7_file, write_file):
        status, out, _ = run(capsys, "check", p7_file, write_file("m.txt", "size 2\n0 1\n2 3\n"))
        assert status == 3
        assert out == "invalid: edge (2, 1) connects two matching edges\n"

    def test_empty_matching(self, capsys, p7_file, write_file):
        status, out, _ = run(capsys, "check", p7_file, write_file("m.txt", "size 0\n"))
        assert status == 0

    def test_bad_matching_file(self, capsys, p7_file, write_file):
        status, _, err = run(capsys, "check", p7_file, write_file("m.txt", "size 1\n"))
        assert status == 1
        assert err.startswith("error: ")


class TestOracle:
    def test_matches_solve_format(self, capsys, p7_file):
        status, out, _ = run(capsys, "oracle", p7_file)
        assert status == 0
        assert out == "size 2\n0 1\n4 3\n"

    def test_guard(self, capsys, monkeypatch, p7_file):
        monkeypatch.setattr(config, "ORACLE_MAX_EDGES", 2)
        status, _, err = run(capsys, "oracle", p7_file)
        assert status == 1
        assert "oracle guard" in err


class TestGen:
    def test_header_records_the_config(self, capsys):
        status, out, _ = run(capsys, "gen", "--seed", "9", "--n", "30")
        assert status == 0
        header = out.splitlines()[0]
        assert header.startswith("# gen {")
        cfg = GenConfig.model_validate_json(header[len("# gen "):])
        assert (cfg.seed, cfg.target_n) == (9, 30)
        assert parse_graph(out).n == 30

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "gen", "--seed", "3", "--n", "50")
        _, second, _ = run(capsys, "gen", "--seed", "3", "--n", "50")
        assert first == second

    def test_shape(self, capsys):
        status, out, _ = run(capsys, "gen", "--shape", "ep", "--k", "7")
        assert status == 0
        assert parse_graph(out).edges == path_graph(7).edges

    def test_odd_cycle_shape(self, capsys):
        status, _, err = run(capsys, "gen", "--shape", "ec", "--k", "9")
        assert status == 1
        assert "even k" in err

    def test_zero_budget(self, capsys):
        status, _, err = run(capsys, "gen", "--n", "0")
        assert status == 1
        assert "at least 1" in err


class TestBench:
    def test_table(self, capsys):
        status, out, _ = run(capsys, "bench", "--sizes", "30,60", "--repeats", "1")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].split()[0] == "size"
        assert lines[-1].startswith("per-node ratio")

    def test_bad_sizes(self, capsys):
        status, out, err = run(capsys, "bench", "--sizes", "ten")
        assert status == 1
        assert out == ""
        assert "error:" in err


class TestUsage:
    def test_unknown_command(self, capsys):
        status, _, err = run(capsys, "frobnicate")
        assert status == 1
        assert err.startswith("error: ")

    def test_help(self, capsys):
        status, out, _ = run(capsys, "--help")
        assert status == 0
        assert "decompose" in out

    def test_missing_file(self, capsys, tmp_path):
        status, _, err = run(capsys, "solve", str(tmp_path / "nope.txt"))
        assert status == 1
        assert "cannot read" in err
