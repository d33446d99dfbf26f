"""End-to-end CLI behaviour: exit-code contract and golden outputs."""

import pytest

from colorkernels import serialize_tournament, t5_star
from colorkernels.cli import run


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


TWO_VERTEX = "tournament 2 1\narc 0 1 0\n"
MONO_TRIANGLE = "digraph 3 1\narc 0 1 0\narc 1 2 0\narc 2 0 0\n"
H1_TEXT = "hypergraph3 3 1\nedge 1 2 3\n"
H_OVERLAP_TEXT = "hypergraph3 6 2\nedge 1 2 3\nedge 1 4 5\n"


class TestGen:
    def test_t5star_to_stdout(self):
        out = run(["gen", "t5star"])
        assert out.exit_code == 0
        assert out.report_text == serialize_tournament(t5_star())

    def test_t5star_to_file(self, tmp_path):
        target = tmp_path / "t5.tour"
        out = run(["gen", "t5star", "-o", str(target)])
        assert out.exit_code == 0
        assert target.read_text() == serialize_tournament(t5_star())

    def test_random_requires_seed(self):
        assert run(["gen", "random", "5", "2"]).exit_code == 2

    def test_random_deterministic(self):
        a = run(["gen", "random", "5", "2", "--seed", "3"])
        b = run(["gen", "random", "5", "2", "--seed", "3"])
        assert a == b and a.exit_code == 0

    def test_tstar_bad_n_is_input_error(self):
        assert run(["gen", "tstar", "2"]).exit_code == 2


class TestKernel:
    def test_t5star_has_no_rainbow_kernel(self, tmp_path):
        target = tmp_path / "t5.tour"
        run(["gen", "t5star", "-o", str(target)])
        out = run(["kernel", "rainbow", str(target)])
        assert out.exit_code == 1
        assert out.report_text == "no rainbow kernel\n"

    def test_pcp_two_vertex(self, tmp_path):
        path = _write(tmp_path, "t.tour", TWO_VERTEX)
        out = run(["kernel", "pcp", path])
        assert out.exit_code == 0
        assert out.report_text == "kernel: 1\n"

    def test_rainbow_kernel_with_witnesses(self, tmp_path):
        path = _write(tmp_path, "d.dg", "digraph 3 2\narc 0 1 0\narc 1 2 1\n")
        out = run(["kernel", "rainbow", path])
        assert out.exit_code == 0
        assert out.report_text.splitlines()[0].startswith("kernel: ")

    def test_guard_refusal(self, tmp_path):
        path = _write(tmp_path, "big.dg", "digraph 30 1\narc 0 1 0\n")
        out = run(["kernel", "rainbow", path])
        assert out.exit_code == 3
        assert out.report_text.startswith("refused:")

    def test_missing_file(self):
        out = run(["kernel", "rainbow", "/nonexistent/file"])
        assert out.exit_code == 2


class TestClosure:
    def test_rainbow_closure_of_mono_triangle(self, tmp_path):
        path = _write(tmp_path, "c.dg", MONO_TRIANGLE)
        out = run(["closure", "rainbow", path])
        assert out.exit_code == 0
        assert out.report_text == "closure 3 3\narc 0 1\narc 1 2\narc 2 0\n"

    def test_pc_closure_requires_tournament(self, tmp_path):
        # A 3-cycle is a tournament, so drop one pair to break the invariant.
        path = _write(tmp_path, "c.dg", "digraph 3 1\narc 0 1 0\narc 1 2 0\n")
        assert run(["closure", "pc", path]).exit_code == 2


class TestCheck:
    def test_thm2_violated_on_t5star(self, tmp_path):
        target = tmp_path / "t5.tour"
        run(["gen", "t5star", "-o", str(target)])
        out = run(["check", "thm2", str(target)])
        assert out.exit_code == 1
        assert out.report_text == "hypothesis violated: subset 0 1 2 3 uses 2 colors\n"

    def test_triangles_on_t5star(self, tmp_path):
        target = tmp_path / "t5.tour"
        run(["gen", "t5star", "-o", str(target)])
        out = run(["check", "triangles", str(target)])
        assert out.exit_code == 1
        assert out.report_text == "non-rainbow triangle: 0 1 3\n"

    def test_cycles_on_acyclic(self, tmp_path):
        path = _write(tmp_path, "a.dg", "digraph 3 1\narc 0 1 0\narc 1 2 0\n")
        out = run(["check", "cycles", path])
        assert out.exit_code == 0
        assert out.report_text == "all cycles rainbow\n"

    def test_lemma1_positive(self, tmp_path):
        path = _write(
            tmp_path, "l.tour", "tournament 3 2\narc 0 1 0\narc 1 2 1\narc 2 0 0\n"
        )
        out = run(["check", "lemma1", path])
        assert out.exit_code == 0
        assert out.report_text == "i=1: 1 -> 2 -> 0  [colors 1 0]\n"

    def test_lemma1_shape_error(self, tmp_path):
        target = tmp_path / "t5.tour"
        run(["gen", "t5star", "-o", str(target)])
        assert run(["check", "lemma1", str(target)]).exit_code == 2


class TestReduceSolveVerify:
    def test_reduce_and_kernel_match_solver(self, tmp_path):
        for name, text in (("h1.h3", H1_TEXT), ("h2.h3", H_OVERLAP_TEXT)):
            hpath = _write(tmp_path, name, text)
            tpath = str(tmp_path / (name + ".tour"))
            assert run(["reduce", "3dpm-to-rkt", hpath, "-o", tpath]).exit_code == 0
            kernel = run(["kernel", "rainbow", tpath])
            solved = run(["solve", "3dpm", hpath])
            assert kernel.exit_code == solved.exit_code

    def test_reduce_chain_composes(self, tmp_path):
        hpath = _write(tmp_path, "h.h3", H1_TEXT)
        rpath = str(tmp_path / "h.rpog")
        assert run(["reduce", "3dpm-to-rpog", hpath, "-o", rpath]).exit_code == 0
        direct = run(["reduce", "3dpm-to-rkt", hpath])
        via_rpog = run(["reduce", "rpog-to-rkt", rpath])
        assert direct.report_text == via_rpog.report_text

    def test_solve_outputs(self, tmp_path):
        hpath = _write(tmp_path, "h.h3", H1_TEXT)
        out = run(["solve", "3dpm", hpath])
        assert out.exit_code == 0 and out.report_text == "matching: 0\n"
        hpath2 = _write(tmp_path, "h2.h3", H_OVERLAP_TEXT)
        out2 = run(["solve", "3dpm", hpath2])
        assert out2.exit_code == 1 and out2.report_text == "no perfect matching\n"

    def test_verify_chain(self, tmp_path):
        hpath = _write(tmp_path, "h.h3", H1_TEXT)
        out = run(["verify", "chain", hpath])
        assert out.exit_code == 0
        assert out.report_text == "3dpm=yes\trainbow-path=yes\trainbow-kernel=yes\nchain agrees\n"


class TestExplore:
    def test_problem1_writes_report_and_figures(self, tmp_path):
        outdir = tmp_path / "explore"
        out = run([
            "explore", "problem1", "--n", "5", "--m", "3",
            "--seeds", "12", "--seed", "0", "-o", str(outdir),
        ])
        assert out.exit_code == 0
        assert (outdir / "report.txt").read_text() == out.report_text
        assert (outdir / "summary.png").stat().st_size > 0
        assert out.report_text.startswith("# explorer problem1:")

    def test_fk_explorer(self, tmp_path):
        outdir = tmp_path / "fk"
        out = run([
            "explore", "fk", "--n", "5", "--m", "3",
            "--seeds", "10", "--seed", "0", "-o", str(outdir),
        ])
        assert out.exit_code == 0
        assert (outdir / "report.txt").exists()


class TestExport:
    def test_dot(self, tmp_path):
        path = _write(tmp_path, "c.dg", MONO_TRIANGLE)
        out = run(["export", "dot", path])
        assert out.exit_code == 0
        assert out.report_text.startswith("digraph D {")

    def test_figure(self, tmp_path):
        path = _write(tmp_path, "c.dg", MONO_TRIANGLE)
        target = str(tmp_path / "c.png")
        out = run(["export", "figure", path, "-o", target])
        assert out.exit_code == 0
        assert (tmp_path / "c.png").stat().st_size > 0


class TestUsageErrors:
    def test_unknown_subcommand(self):
        assert run(["frobnicate"]).exit_code == 2

    def test_unknown_flag(self):
        assert run(["gen", "t5star", "--bogus"]).exit_code == 2

    def test_no_arguments(self):
        assert run([]).exit_code == 2


def test_main_streams_and_exit_code(monkeypatch, capsys):
    import colorkernels.cli as cli

    monkeypatch.setattr("sys.argv", ["colorkernels", "gen", "t5star"])
    with pytest.raises(SystemExit) as exc:
        cli.main()
    assert exc.value.code == 0
    captured = capsys.readouterr()
    assert captured.out == serialize_tournament(t5_star())

    monkeypatch.setattr("sys.argv", ["colorkernels", "gen", "tstar", "2"])
    with pytest.raises(SystemExit) as exc:
        cli.main()
    assert exc.value.code == 2
    assert "input error" in capsys.readouterr().err
