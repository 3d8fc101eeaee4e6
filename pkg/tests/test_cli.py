import csv
import json
import math

import pytest

from oscpair.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def read_csv(text):
    rows = list(csv.DictReader(text.splitlines()))
    return rows


class TestSpectrum:
    def test_r_scan_row_count_and_limit(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--r-scan", "0.1:3:100")
        assert code == 0
        rows = read_csv(out)
        assert len(rows) == 100
        assert list(rows[0]) == ["r", "theta_c"]
        below = [float(r["theta_c"]) for r in rows if float(r["r"]) < 1.0]
        above = [float(r["theta_c"]) for r in rows if float(r["r"]) > 1.0]
        assert max(below) < math.pi / 4
        assert below[-1] > 0.7  # approaches pi/4 near resonance
        assert all(v == 0.0 for v in above)

    def test_energy_table_at_zero_coupling(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--omega-x", "1.0", "--omega-y", "0.8",
            "--epsilon", "0:0:1", "--n-max", "1", "--m-max", "1",
        )
        assert code == 0
        rows = read_csv(out)
        assert len(rows) == 4
        for row in rows:
            n, m = int(row["n"]), int(row["m"])
            want = (1.0 * (2 * n + 1) + 0.8 * (2 * m + 1)) / 2
            assert float(row["energy"]) == pytest.approx(want, rel=1e-14)

    def test_boundary_rows_skipped_with_warning(self, capsys):
        code, out, err = run_cli(
            capsys, "spectrum", "--omega-x", "1.0", "--omega-y", "1.0",
            "--epsilon", "0:1:3", "--n-max", "0", "--m-max", "0",
        )
        assert code == 0
        assert len(read_csv(out)) == 2  # eps = 1.0 dropped
        assert "skipping epsilon=1" in err


class TestMoments:
    def test_json_payload(self, capsys):
        code, out, _ = run_cli(
            capsys, "moments", "--omega-x", "1", "--omega-y", "0.99",
            "--epsilon", "0.5", "--n", "2", "--m", "0",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 2
        assert set(payload) >= {"xx", "yy", "pp", "qq", "xy", "pq",
                                "xxyy", "ppqq", "xxqq", "yypp"}
        assert payload["xx"] > 0

    def test_invalid_coupling_exits_one(self, capsys):
        code, _, err = run_cli(
            capsys, "moments", "--omega-x", "1", "--omega-y", "1", "--epsilon", "1.5",
        )
        assert code == 1
        assert "error:" in err


class TestWignerEval:
    def test_grid_and_origin_value(self, capsys):
        code, out, _ = run_cli(
            capsys, "wigner-eval", "--omega-x", "1", "--omega-y", "1",
            "--epsilon", "0.5", "--n", "1", "--m", "0",
            "--x=-1:1:3", "--p", "0:0:1", "--y", "0:0:1", "--q", "0:0:1",
        )
        assert code == 0
        rows = read_csv(out)
        assert [r["x"] for r in rows] == ["-1", "0", "1"]
        origin = [r for r in rows if float(r["x"]) == 0.0][0]
        assert float(origin["W"]) == pytest.approx(-1 / math.pi**2, rel=1e-12)


class TestPurityScan:
    def test_columns_and_resonant_values(self, capsys):
        code, out, _ = run_cli(
            capsys, "purity-scan", "--omega-x", "1", "--omega-y", "1",
            "--epsilon", "0.05:0.9:2", "--n-max", "1", "--m-max", "0",
        )
        assert code == 0
        rows = read_csv(out)
        assert list(rows[0]) == ["omega_x", "omega_y", "epsilon", "n", "m",
                                 "purity", "S_L", "S_L_makarov", "delta_S_L"]
        ground = {float(r["epsilon"]): r for r in rows if r["n"] == "0" and r["m"] == "0"}
        assert float(ground[0.05]["S_L"]) == pytest.approx(0.0, abs=1e-3)
        assert float(ground[0.9]["S_L"]) == pytest.approx(0.2208, abs=1e-4)
        # approximate entropy column ignores the coupling at resonance
        excited = [r for r in rows if r["n"] == "1"]
        assert len({r["S_L_makarov"] for r in excited}) == 1


class TestSteeringScan:
    def test_preset_has_no_mutual_steering(self, capsys):
        code, out, _ = run_cli(capsys, "steering-scan", "--preset", "0.8",
                               "--n-max", "3", "--steps", "41")
        assert code == 0
        rows = read_csv(out)
        assert len(rows) == 40 * 6  # boundary row dropped, 6 state families
        for row in rows:
            assert float(row["s_xy"]) * float(row["s_yx"]) == 0.0

    def test_explicit_sweep_at_resonance_is_null(self, capsys):
        code, out, _ = run_cli(
            capsys, "steering-scan", "--omega-x", "1", "--omega-y", "1",
            "--epsilon", "0.1:0.9:5", "--n-max", "2", "--m-max", "2",
        )
        assert code == 0
        for row in read_csv(out):
            assert float(row["s_xy"]) == 0.0
            assert float(row["s_yx"]) == 0.0


class TestDeterminism:
    def test_byte_identical_csv_across_runs(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            code = main(["purity-scan", "--omega-x", "1", "--omega-y", "0.8",
                         "--epsilon", "0:0.7:9", "--n-max", "2", "--m-max", "2",
                         "--output", str(path)])
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_json_format_mirrors_csv_records(self, capsys):
        code, out, _ = run_cli(
            capsys, "steering-scan", "--omega-y", "0.8", "--epsilon", "0.2:0.4:2",
            "--n-max", "1", "--m-max", "0", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload) == 4
        assert set(payload[0]) == {"omega_x", "omega_y", "epsilon", "n", "m",
                                   "s_xy", "s_yx", "delta", "s_xy_raw", "s_yx_raw"}


class TestVerify:
    def test_fresh_build_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        assert "PASS moment-table" in out
        assert "all checks passed" in out

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert {c["name"] for c in report["checks"]} >= {
            "ground-purity-closed-form", "marginal-purity-svd", "global-purity",
            "moment-table", "resonance-steering-null",
        }
        for check in report["checks"]:
            assert check["max_deviation"] <= check["tolerance"]

    def test_injected_fault_fails_with_exit_two(self, capsys, monkeypatch):
        from oscpair import moments as moments_module

        true_fn = moments_module.second_and_fourth_moments

        def corrupted(params, nm):
            ms = true_fn(params, nm)
            return type(ms)(xx=ms.xx, yy=ms.yy, pp=ms.pp * (1.0 + 5e-7), qq=ms.qq,
                            xy=ms.xy, pq=ms.pq, xxyy=ms.xxyy, ppqq=ms.ppqq,
                            xxqq=ms.xxqq, yypp=ms.yypp)

        monkeypatch.setattr(moments_module, "second_and_fourth_moments", corrupted)
        code, out, _ = run_cli(capsys, "verify")
        assert code == 2
        assert "FAIL moment-table" in out


class TestArgumentHandling:
    def test_unknown_command_is_validation_error(self, capsys):
        assert main(["no-such-command"]) == 1

    def test_bad_range_spec(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--r-scan", "nonsense")
        assert code == 1
        assert "error:" in err

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
