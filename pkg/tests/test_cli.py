import pytest

from mapdelta.cli import main
from mapdelta.formats import emit_graph, emit_map
from mapdelta.fixtures import get_fixture


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_examples_list(self, capsys):
        code, out, _ = run(capsys, "examples", "list")
        assert code == 0
        names = out.split()
        for expected in ("loop", "bridge", "crosscap", "theta", "torus1v", "k4sphere", "k5torus"):
            assert expected in names

    def test_examples_show_roundtrips_through_validate(self, capsys, tmp_path):
        code, out, _ = run(capsys, "examples", "show", "loop")
        assert code == 0
        path = tmp_path / "loop.map"
        path.write_text(out)
        code, out, _ = run(capsys, "validate", str(path))
        assert code == 0 and "valid" in out

    def test_euler_and_orientable(self, capsys):
        code, out, _ = run(capsys, "euler", "crosscap")
        assert code == 0 and out.strip() == "1"
        code, out, _ = run(capsys, "orientable", "crosscap")
        assert code == 0 and out.strip() == "non-orientable"

    def test_validate_bad_file_exit_1(self, capsys, tmp_path):
        path = tmp_path / "bad.map"
        path.write_text("map bad\nflags 4\nR: 0-1 2-3\nG: 0-1 2-3\nB: 0-2 1-3\n")
        code, _, err = run(capsys, "validate", str(path))
        assert code == 1 and err

    def test_missing_file_exit_1(self, capsys):
        code, _, err = run(capsys, "validate", "/nonexistent.map")
        assert code == 1 and err


class TestFeasibleAndMatroids:
    def test_feasible_gamma_torus(self, capsys):
        code, out, _ = run(capsys, "feasible", "--variant", "gamma", "torus1v")
        assert code == 0
        assert out == "{}\n{1,2}\n"

    def test_feasible_k_torus(self, capsys):
        code, out, _ = run(capsys, "feasible", "--variant", "k", "torus1v")
        assert code == 0
        assert out == "{}\n{1}\n{2}\n{1,2}\n"

    def test_feasible_red_complement(self, capsys):
        code, out, _ = run(capsys, "feasible", "--color", "red", "loop")
        assert code == 0 and out == "{1}\n"

    def test_matroids_output(self, capsys):
        code, out, _ = run(capsys, "matroids", "torus1v")
        assert code == 0
        assert "lower rank 0" in out and "upper rank 2" in out

    def test_size_guard_exit_3(self, capsys):
        code, _, err = run(capsys, "feasible", "--max-edges", "5", "k5torus")
        assert code == 3 and err


class TestCheckDelta:
    def test_family_violation_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.family"
        path.write_text("{1,2}\n{3,4}\n")
        code, out, _ = run(capsys, "check-delta", str(path))
        assert code == 2
        assert "F1={1,2} F2={3,4} x=1" in out

    def test_family_pass_exit_0(self, capsys, tmp_path):
        path = tmp_path / "ok.family"
        path.write_text("{}\n{1,2}\n")
        code, out, _ = run(capsys, "check-delta", str(path))
        assert code == 0 and "holds" in out

    def test_map_input(self, capsys, tmp_path):
        path = tmp_path / "loop.map"
        path.write_text(emit_map(get_fixture("loop")))
        code, out, _ = run(capsys, "check-delta", str(path))
        assert code == 0


class TestReconstruct:
    def test_k4_reconstruct_emits_valid_map(self, capsys, tmp_path):
        m = get_fixture("k4sphere")
        gp = tmp_path / "g.graph"
        dp = tmp_path / "d.graph"
        gp.write_text(emit_graph(m.underlying_graph()))
        dp.write_text(emit_graph(m.dual_graph()))
        code, out, _ = run(capsys, "reconstruct", "--graph", str(gp), "--dual", str(dp))
        assert code == 0
        from mapdelta.formats import parse_map
        from mapdelta.rebuild import maps_isomorphic

        assert maps_isomorphic(parse_map(out), m)

    def test_ambiguous_reconstruct_exit_2(self, capsys, tmp_path):
        m = get_fixture("loop")
        gp = tmp_path / "g.graph"
        dp = tmp_path / "d.graph"
        gp.write_text(emit_graph(m.underlying_graph()))
        dp.write_text(emit_graph(m.dual_graph()))
        code, _, err = run(capsys, "reconstruct", "--graph", str(gp), "--dual", str(dp))
        assert code == 2 and "Ambiguous" in err


class TestVerifyAll:
    def test_torus_fixture_report(self, capsys):
        code, out, _ = run(capsys, "verify-all", "torus1v")
        assert code == 0
        assert "|F_gamma|=2" in out and "|F_K|=4" in out
        assert "FAIL" not in out

    def test_random_corpus(self, capsys):
        code, out, _ = run(capsys, "verify-all", "--random", "5", "--seed", "3")
        assert code == 0
        assert out.count("map ") == 5
