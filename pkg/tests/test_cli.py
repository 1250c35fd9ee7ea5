"""Command-line surface: formats, exit codes, determinism, config files."""
import json
import math
import os
import subprocess
import sys

import pytest

from diracrates import cli


def run_cli(argv):
    return cli.main(argv)


class TestRate:
    def test_ground_inertial_total_zero(self, capsys):
        code = run_cli(
            ["rate", "--omega0", "1", "--accel", "0", "--coupling", "1",
             "--state", "ground", "--format", "json"]
        )
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["rate_total"] == 0.0

    def test_excited_inertial_value(self, capsys):
        code = run_cli(
            ["rate", "--omega0", "1", "--accel", "0", "--coupling", "1",
             "--state", "excited", "--format", "json"]
        )
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["rate_total"] == pytest.approx(-1 / (240 * math.pi**3))

    def test_unruh_temperature_json(self, capsys):
        run_cli(
            ["rate", "--omega0", "1", "--accel", "6.2832", "--coupling", "1",
             "--state", "ground", "--format", "json"]
        )
        out = json.loads(capsys.readouterr().out)
        assert out["effective_temperature"] == pytest.approx(1.0, rel=1e-4)

    def test_json_csv_agree(self, capsys):
        args = ["rate", "--omega0", "1.5", "--accel", "2", "--state", "excited"]
        run_cli(args + ["--format", "json"])
        as_json = json.loads(capsys.readouterr().out)
        run_cli(args + ["--format", "csv"])
        header, row = capsys.readouterr().out.strip().splitlines()
        as_csv = dict(zip(header.split(","), row.split(",")))
        for key in ("rate_vf", "rate_cross", "rate_total", "poly_factor"):
            assert float(as_csv[key]) == as_json[key]

    def test_si_accel_flag(self, capsys):
        run_cli(
            ["rate", "--omega0", "1e16", "--si-accel", "3e24",
             "--state", "ground", "--format", "json"]
        )
        out = json.loads(capsys.readouterr().out)
        assert out["accel"] == pytest.approx(3e24 / 2.99792458e8)

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            run_cli(["rate", "--omega0", "not-a-number"])
        assert err.value.code == 2

    def test_invalid_value_exit_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            run_cli(["rate", "--omega0", "-1"])
        assert err.value.code == 2


class TestSweep:
    def test_inertial_first_row(self, capsys):
        code = run_cli(
            ["sweep", "--omega0", "1", "--accel-min", "0", "--accel-max", "1",
             "--points", "2", "--state", "ground"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == cli.SWEEP_HEADER
        first = lines[1].split(",")
        assert float(first[0]) == 0.0
        assert float(first[3]) == 0.0  # rate_total

    def test_monotone_ground_totals(self, capsys):
        run_cli(
            ["sweep", "--omega0", "1", "--accel-min", "0.1", "--accel-max", "20",
             "--points", "40", "--state", "ground"]
        )
        rows = capsys.readouterr().out.strip().splitlines()[1:]
        totals = [float(r.split(",")[3]) for r in rows]
        assert all(b > a for a, b in zip(totals, totals[1:]))

    def test_log_sweep_quartic_dominance(self, capsys):
        run_cli(
            ["sweep", "--omega0", "1", "--accel-min", "0.1", "--accel-max", "100",
             "--points", "10", "--scale", "log", "--state", "ground"]
        )
        last = capsys.readouterr().out.strip().splitlines()[-1].split(",")
        a, total, planck_n = float(last[0]), float(last[3]), float(last[5])
        quartic_only = (
            (1 / (60 * math.pi**3)) * 0.25 * (4 * a**4) * planck_n
        )
        assert total / quartic_only == pytest.approx(1.0, rel=0.01)

    def test_deterministic_output_file(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (out1, out2):
            code = run_cli(
                ["sweep", "--omega0", "2", "--accel-min", "0", "--accel-max", "5",
                 "--points", "20", "--state", "excited", "--output", str(out)]
            )
            assert code == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_io_failure_exit_1(self, tmp_path, capsys):
        code = run_cli(
            ["sweep", "--accel-min", "0", "--accel-max", "1", "--points", "2",
             "--output", str(tmp_path / "missing" / "out.csv")]
        )
        assert code == 1

    def test_missing_range_is_usage_error(self):
        with pytest.raises(SystemExit):
            run_cli(["sweep", "--accel-min", "0", "--points", "2"])


class TestVerify:
    def test_single_point_pass(self, capsys):
        code = run_cli(
            ["verify", "--omega0", "1", "--accel", "1", "--state", "ground",
             "--format", "json"]
        )
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        entry = report["entries"][0]
        for key in (
            "accel", "state", "numeric_vf", "closed_vf", "numeric_cross",
            "closed_cross", "rel_err_vf", "rel_err_cross", "per_epsilon",
            "passed",
        ):
            assert key in entry

    def test_unreachable_tolerance_exit_3(self, capsys):
        code = run_cli(
            ["verify", "--accel", "1", "--state", "ground", "--tol", "1e-12"]
        )
        assert code == 3
        assert "CONVERGENCE" in capsys.readouterr().out

    def test_explicit_epsilon_schedule(self, capsys):
        code = run_cli(
            ["verify", "--accel", "1", "--state", "excited",
             "--epsilons", "0.04,0.02,0.01", "--format", "json"]
        )
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        eps = [p["epsilon"] for p in report["entries"][0]["per_epsilon"]]
        assert eps == [0.04, 0.02, 0.01]


class TestSelfcheck:
    def test_passes(self, capsys):
        code = run_cli(["selfcheck"])
        assert code == 0
        out = capsys.readouterr().out
        assert "16 cases checked" in out
        assert out.count("pass") == 4


class TestConfigFile:
    def test_config_supplies_defaults(self, tmp_path, capsys):
        cfg = tmp_path / "recipe.cfg"
        cfg.write_text("omega0 = 2\naccel = 1\nstate = excited\nformat = json\n")
        code = run_cli(["rate", "--config", str(cfg)])
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["omega0"] == 2.0
        assert out["state"] == "excited"

    def test_flags_override_config(self, tmp_path, capsys):
        cfg = tmp_path / "recipe.cfg"
        cfg.write_text("omega0 = 2\naccel = 1\nformat = json\n")
        run_cli(["rate", "--config", str(cfg), "--omega0", "3"])
        out = json.loads(capsys.readouterr().out)
        assert out["omega0"] == 3.0
        assert out["accel"] == 1.0


class TestEntryPoint:
    def test_module_invocation(self):
        env = dict(os.environ, PYTHONPATH="src")
        proc = subprocess.run(
            [sys.executable, "-m", "diracrates", "rate", "--omega0", "1",
             "--accel", "0", "--state", "ground", "--format", "json"],
            capture_output=True, text=True, env=env,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["rate_total"] == 0.0
