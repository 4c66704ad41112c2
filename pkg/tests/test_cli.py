"""Command-line behavior: flows, file formats, exit codes, grid CSV."""

import pytest

from fcckit.cli import (
    EXIT_BUDGET,
    EXIT_FAILURE,
    EXIT_FORMAT,
    EXIT_OK,
    GridSpec,
    main,
    parse_range_list,
    run_experiment_grid,
)
from fcckit.formats import parse_scheme_file


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstructEncodeDecode:
    def test_construct_or_and_encode(self, tmp_path, capsys):
        scheme_path = tmp_path / "or.scheme"
        code, out, _ = run(
            capsys, "construct", "or", "--q", "2", "--k", "3", "--t", "1",
            "--out", str(scheme_path),
        )
        assert code == EXIT_OK
        assert "or_scheme" in out
        code, out, _ = run(capsys, "encode", "--in", str(scheme_path), "1", "0", "1")
        assert code == EXIT_OK
        assert out.strip() == "1 0 1 1 1"

    def test_construct_rs_writes_linear_scheme(self, tmp_path, capsys):
        path = tmp_path / "rs.scheme"
        code, out, _ = run(
            capsys, "construct", "rs", "--q", "7", "--k", "3", "--t", "2",
            "--out", str(path),
        )
        assert code == EXIT_OK
        assert "[7,3,5]_7" in out
        scheme = parse_scheme_file(path.read_text())
        assert scheme.kind == "linear"
        assert (scheme.q, scheme.k, scheme.r) == (7, 3, 4)

    def test_construct_bch(self, capsys):
        code, out, _ = run(capsys, "construct", "bch", "--k", "4", "--t", "1")
        assert code == EXIT_OK
        assert "r=3" in out

    def test_decode_within_radius(self, tmp_path, capsys):
        path = tmp_path / "or.scheme"
        run(capsys, "construct", "or", "--q", "2", "--k", "3", "--t", "1",
            "--out", str(path))
        code, out, _ = run(
            capsys, "decode", "--in", str(path), "--function", "or",
            "--q", "2", "--k", "3", "--t", "1", "0", "0", "1", "1", "0",
        )
        assert code == EXIT_OK
        assert "label=1" in out
        assert "within_radius=true" in out

    def test_decode_beyond_radius_strict_exit_1(self, tmp_path, capsys):
        path = tmp_path / "or.scheme"
        run(capsys, "construct", "or", "--q", "2", "--k", "3", "--t", "1",
            "--out", str(path))
        code, _, err = run(
            capsys, "decode", "--in", str(path), "--function", "or",
            "--q", "2", "--k", "3", "--t", "1", "1", "1", "0", "0", "0",
        )
        assert code == EXIT_FAILURE
        assert "distance 2" in err

    def test_decode_best_effort(self, tmp_path, capsys):
        path = tmp_path / "or.scheme"
        run(capsys, "construct", "or", "--q", "2", "--k", "3", "--t", "1",
            "--out", str(path))
        code, out, _ = run(
            capsys, "decode", "--in", str(path), "--function", "or",
            "--q", "2", "--k", "3", "--t", "1", "--no-strict",
            "1", "1", "0", "0", "0",
        )
        assert code == EXIT_OK
        assert "within_radius=false" in out


class TestVerifySearch:
    def test_verify_pass(self, tmp_path, capsys):
        path = tmp_path / "or.scheme"
        run(capsys, "construct", "or", "--q", "2", "--k", "3", "--t", "1",
            "--out", str(path))
        code, out, _ = run(
            capsys, "verify", "--in", str(path), "--function", "or",
            "--q", "2", "--k", "3", "--t", "1",
        )
        assert code == EXIT_OK
        assert out.startswith("pass")

    def test_verify_fail_exit_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.scheme"
        bad.write_text("table 2 1 2\n0 0\n0 0\n")
        code, out, _ = run(
            capsys, "verify", "--in", str(bad), "--function", "or",
            "--q", "2", "--k", "1", "--t", "1",
        )
        assert code == EXIT_FAILURE
        assert out.startswith("fail")

    def test_verify_with_function_file(self, tmp_path, capsys):
        scheme = tmp_path / "or.scheme"
        run(capsys, "construct", "or", "--q", "2", "--k", "2", "--t", "1",
            "--out", str(scheme))
        func = tmp_path / "f.func"
        func.write_text("2 2\n0\n1\n1\n1\n")
        code, out, _ = run(
            capsys, "verify", "--in", str(scheme), "--function", str(func),
            "--t", "1",
        )
        assert code == EXIT_OK

    def test_search_writes_verifying_witness(self, tmp_path, capsys):
        witness = tmp_path / "w.scheme"
        code, out, _ = run(
            capsys, "search", "--function", "or", "--q", "2", "--k", "2",
            "--t", "1", "--out", str(witness),
        )
        assert code == EXIT_OK
        assert "r=2" in out
        code, out, _ = run(
            capsys, "verify", "--in", str(witness), "--function", "or",
            "--q", "2", "--k", "2", "--t", "1",
        )
        assert code == EXIT_OK

    def test_search_budget_exit_3(self, capsys):
        code, _, err = run(
            capsys, "search", "--function", "identity", "--q", "2", "--k", "3",
            "--t", "2", "--budget", "40",
        )
        assert code == EXIT_BUDGET
        assert "nodes" in err

    def test_env_budget_override(self, capsys, monkeypatch):
        monkeypatch.setenv("FCC_BUDGET", "40")
        code, _, _ = run(
            capsys, "search", "--function", "identity", "--q", "2", "--k", "3",
            "--t", "2",
        )
        assert code == EXIT_BUDGET
        # explicit flag beats the environment
        code, _, _ = run(
            capsys, "search", "--function", "identity", "--q", "2", "--k", "3",
            "--t", "2", "--budget", "100000",
        )
        assert code == EXIT_OK


class TestBoundsSimulate:
    def test_bounds_text(self, capsys):
        code, out, _ = run(capsys, "bounds", "--q", "2", "--k", "16", "--t", "2")
        assert code == EXIT_OK
        assert "lower_2t" in out and "4" in out
        assert "12.200134125" in out

    def test_bounds_csv(self, capsys):
        code, out, _ = run(capsys, "bounds", "--q", "2", "--k", "16", "--t", "2", "--csv")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert len(lines) == 2
        assert lines[0].startswith("q,k,t,")

    def test_bounds_conjectured_for_nonbinary(self, capsys):
        code, out, _ = run(capsys, "bounds", "--q", "5", "--k", "3", "--t", "1")
        assert code == EXIT_OK
        assert "(conjectured)" in out

    def test_simulate_clean(self, tmp_path, capsys):
        path = tmp_path / "rs.scheme"
        run(capsys, "construct", "rs", "--q", "7", "--k", "3", "--t", "2",
            "--out", str(path))
        code, out, _ = run(
            capsys, "simulate", "--in", str(path), "--function", "identity",
            "--q", "7", "--k", "3", "--t", "2", "--trials", "50", "--seed", "5",
        )
        assert code == EXIT_OK
        assert "failures=0" in out

    def test_simulate_detects_broken_scheme(self, tmp_path, capsys):
        bad = tmp_path / "bad.scheme"
        bad.write_text("table 2 1 2\n0 0\n0 0\n")
        code, out, _ = run(
            capsys, "simulate", "--in", str(bad), "--function", "or",
            "--q", "2", "--k", "1", "--t", "1", "--trials", "40", "--seed", "1",
        )
        assert code == EXIT_FAILURE

    def test_simulate_fixed_weight_zero(self, tmp_path, capsys):
        bad = tmp_path / "bad.scheme"
        bad.write_text("table 2 1 2\n0 0\n0 0\n")
        code, out, _ = run(
            capsys, "simulate", "--in", str(bad), "--function", "or",
            "--q", "2", "--k", "1", "--t", "1", "--trials", "20",
            "--weight", "0", "--seed", "1",
        )
        assert code == EXIT_OK  # error-free channel decodes even a weak scheme
        assert "failures=0" in out

    def test_simulate_deterministic(self, tmp_path, capsys):
        path = tmp_path / "or.scheme"
        run(capsys, "construct", "or", "--q", "3", "--k", "2", "--t", "1",
            "--out", str(path))
        args = (
            "simulate", "--in", str(path), "--function", "or", "--q", "3",
            "--k", "2", "--t", "1", "--trials", "30", "--seed", "9",
        )
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestGrid:
    def test_rows_and_determinism(self, capsys):
        args = (
            "grid", "--q", "2", "--k", "2..3", "--t", "1",
            "--functions", "or", "identity", "--no-timing",
        )
        code, first, _ = run(capsys, *args)
        assert code == EXIT_OK
        code, second, _ = run(capsys, *args)
        assert first == second  # byte-identical
        lines = first.strip().split("\n")
        assert lines[0] == (
            "q,k,t,function_name,exact_r,lower_2t,eq2_upper,"
            "sphere_packing_r,mds_equality,nodes,seconds"
        )
        assert len(lines) == 5
        assert lines[1].startswith("2,2,1,or,2,2,")
        assert lines[2].startswith("2,2,1,identity,3,2,")

    def test_grid_to_file(self, tmp_path, capsys):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(
            capsys, "grid", "--q", "5", "--k", "2", "--t", "1",
            "--functions", "identity", "--no-timing", "--out", str(out_path),
        )
        assert code == EXIT_OK
        text = out_path.read_text()
        assert "5,2,1,identity,2," in text
        assert ",true," in text  # mds_equality

    def test_budget_cells_recorded_not_fatal(self, capsys):
        code, out, _ = run(
            capsys, "grid", "--q", "2", "--k", "3", "--t", "1..2",
            "--functions", "identity", "--budget", "60", "--no-timing",
        )
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert len(lines) == 3
        assert any(",budget," in line for line in lines)

    def test_rows_satisfy_proposition_invariant(self):
        spec = GridSpec(qs=(2, 3), ks=(2, 3), ts=(1,), functions=("or", "identity"))
        for row in run_experiment_grid(spec, timer=None):
            assert row.exact_r is not None
            assert row.exact_r >= row.lower_2t
            if row.q == 2 and row.eq2_upper is not None:
                assert row.exact_r < row.eq2_upper
            assert row.seconds == 0.0


class TestErrorsAndParsing:
    def test_bad_file_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.func"
        bad.write_text("2 2\n0\n1\n")
        code, _, err = run(
            capsys, "search", "--function", str(bad), "--t", "1",
        )
        assert code == EXIT_FORMAT
        assert "line" in err

    def test_missing_scheme_file_exit_2(self, capsys):
        code, _, _ = run(capsys, "encode", "--in", "/nonexistent/path.scheme", "1")
        assert code == EXIT_FORMAT

    def test_unwritable_output_exit_2(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "construct", "or", "--q", "2", "--k", "2", "--t", "1",
            "--out", str(tmp_path / "no" / "such" / "dir" / "x.scheme"),
        )
        assert code == EXIT_FORMAT
        assert "cannot write" in err

    def test_builtin_needs_dimensions(self, capsys):
        code, _, err = run(capsys, "search", "--function", "or", "--t", "1")
        assert code == EXIT_FORMAT
        assert "--q" in err

    def test_field_too_small_exit_2(self, capsys):
        code, _, _ = run(capsys, "construct", "rs", "--q", "4", "--k", "3", "--t", "1")
        assert code == EXIT_FORMAT

    def test_construct_rs_requires_q(self, capsys):
        code, _, err = run(capsys, "construct", "rs", "--k", "3", "--t", "1")
        assert code == EXIT_FORMAT
        assert "--q" in err

    def test_parse_range_list(self):
        assert parse_range_list("2,3,4") == (2, 3, 4)
        assert parse_range_list("2..5") == (2, 3, 4, 5)
        assert parse_range_list("2,4..6,9") == (2, 4, 5, 6, 9)

    def test_threshold_spec_with_aux(self, capsys):
        code, out, _ = run(
            capsys, "search", "--function", "threshold:2", "--q", "2", "--k", "3",
            "--t", "1",
        )
        assert code == EXIT_OK
        assert out.startswith("r=")
