"""Tests for the chowgen command line."""

import dataclasses
import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from chowgen import __version__
from chowgen.cli import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    collect_checks,
    main,
    resummation_range,
    verify_rank,
)
from chowgen.emitters import OutputFormat, parse_presentation_json, render_presentations
from chowgen.golden import TABLE_ONE
from chowgen.presentation import Form


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPresent:
    """Tests for `chowgen present`."""

    def test_gf_text(self, capsys):
        """Test text output of the series form."""
        code, out, _ = run(capsys, "present", "--r", "1", "--form", "gf")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "# r=1 form=gf"
        assert "rho_2,2 = 3T^2 + c2" in out.splitlines()

    def test_both_forms_by_default(self, capsys):
        """Test that both forms are printed by default."""
        code, out, _ = run(capsys, "present", "--r", "2")
        assert code == EXIT_OK
        assert "# r=2 form=closed" in out
        assert "# r=2 form=gf" in out

    def test_json(self, capsys):
        """Test JSON output of one form."""
        code, out, _ = run(capsys, "present", "--r", "3", "--form", "closed", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["r"] == 3
        assert len(data["generators"]) == 8

    def test_json_round_trips_byte_for_byte(self, capsys):
        """Test that parsing and re-rendering the JSON output reproduces it exactly."""
        _, out, _ = run(capsys, "present", "--r", "2", "--form", "both", "--format", "json")
        ideals = parse_presentation_json(out)

        assert [i.form for i in ideals] == [Form.CLOSED, Form.GF]
        assert render_presentations(ideals, OutputFormat.JSON).payload == out

    def test_output_is_deterministic(self, capsys):
        """Test that repeated runs print the same bytes."""
        _, first, _ = run(capsys, "present", "--r", "4", "--format", "json")
        _, second, _ = run(capsys, "present", "--r", "4", "--format", "json")
        assert first == second

    @pytest.mark.parametrize("r", ["0", "-1", "x"])
    def test_bad_r_is_usage_error(self, capsys, r):
        """Test that a bad r exits 2 with nothing on stdout."""
        code, out, _ = run(capsys, "present", "--r", r)
        assert code == EXIT_USAGE
        assert out == ""


class TestVerify:
    """Tests for `chowgen verify`."""

    def test_r_max_1(self, capsys):
        """Test every check at r_max = 1."""
        code, out, _ = run(capsys, "verify", "--r-max", "1", "--jobs", "1")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert "claim_Z1 r=1 PASS" in lines
        assert "claim_Z2 r=1 PASS" in lines
        assert "ambient_redundancy PASS" in lines
        assert "complement_class PASS" in lines
        assert "resummation A(2,2) PASS" in lines
        assert lines[-1] == "summary: 10 checks, 0 failed"

    def test_jobs_do_not_change_output(self, capsys):
        """Test that worker count does not change output."""
        _, serial, _ = run(capsys, "verify", "--r-max", "3", "--jobs", "1")
        _, parallel, _ = run(capsys, "verify", "--r-max", "3", "--jobs", "2")
        assert serial == parallel

    def test_failure_exit_code(self, capsys, monkeypatch):
        """Test that a failed check exits 1."""
        monkeypatch.setattr("chowgen.cli.verify_complement_class", lambda: False)
        code, out, _ = run(capsys, "verify", "--r-max", "1")
        assert code == EXIT_FAILED
        assert "complement_class FAIL" in out
        assert out.splitlines()[-1] == "summary: 10 checks, 1 failed"

    def test_collect_checks_order(self):
        """Test the order of the checks."""
        names = [name for name, _ in collect_checks(2)]
        assert names[:4] == ["claim_Z1 r=1", "claim_Z1 r=2", "claim_Z2 r=1", "claim_Z2 r=2"]
        assert len(names) == 4 + 2 + 6

    def test_verify_rank(self):
        """Test both claims for one r."""
        assert verify_rank(2) == (2, True, True)

    def test_resummation_range(self):
        """Test the r bound for each resummation."""
        assert resummation_range(1, 2, 25, 10) == 8
        assert resummation_range(2, 2, 25, 10) == 4
        assert resummation_range(2, 0, 3, 40) == 3
        assert resummation_range(2, 2, 5, 1) == 0

    def test_timeout_stops_sweep(self, capsys, monkeypatch):
        """Test that --timeout aborts a slow claim sweep with exit 1."""

        def slow_rank(r):
            time.sleep(0.05)
            return r, True, True

        monkeypatch.setattr("chowgen.cli.verify_rank", slow_rank)
        code, out, err = run(capsys, "verify", "--r-max", "3", "--jobs", "1", "--timeout", "0.01")

        assert code == EXIT_FAILED
        assert out == ""
        assert "timed out" in err

    @pytest.mark.parametrize("value", ["0", "-5", "soon"])
    def test_timeout_must_be_positive(self, capsys, value):
        """Test that a non-positive --timeout is a usage error."""
        code, _, _ = run(capsys, "verify", "--timeout", value)
        assert code == EXIT_USAGE

    def test_short_memory_runs_inline(self, capsys, monkeypatch):
        """Test that the sweep falls back to this process when memory is short."""
        seen = {}

        def record_jobs(func, values, jobs=1, **kwargs):
            seen["jobs"] = jobs
            return [func(v) for v in values]

        monkeypatch.setattr("chowgen.cli.monitor.pool_allowed", lambda jobs: False)
        monkeypatch.setattr("chowgen.cli.run_sweep_sync", record_jobs)
        code, _, _ = run(capsys, "verify", "--r-max", "2", "--jobs", "4")

        assert code == EXIT_OK
        assert seen["jobs"] == 1

    def test_jobs_must_be_positive(self, capsys):
        """Test that --jobs 0 is a usage error."""
        code, _, _ = run(capsys, "verify", "--jobs", "0")
        assert code == EXIT_USAGE


class TestSeries:
    """Tests for `chowgen series`."""

    def test_r1(self, capsys):
        """Test the first R1 components."""
        code, out, _ = run(capsys, "series", "--which", "R1", "--max-degree", "2")
        assert code == EXIT_OK
        assert out == "deg0: 2\ndeg1: 4T\ndeg2: 6T^2 - 2c2\n"

    def test_r2_reduced(self, capsys):
        """Test that R2 is printed mod 2c3 by default."""
        _, out, _ = run(capsys, "series", "--which", "R2", "--max-degree", "4")
        lines = out.splitlines()
        assert lines[1] == "deg1: 0"
        assert lines[4] == "deg4: 6T^4 + 3c2T^2 + c3T + c2^2"

    def test_r2_exact(self, capsys):
        """Test that --exact keeps odd c3 coefficients."""
        _, out, _ = run(capsys, "series", "--which", "R2", "--max-degree", "4", "--exact")
        assert out.splitlines()[4] == "deg4: 6T^4 + 3c2T^2 + 3c3T + c2^2"

    def test_json(self, capsys):
        """Test JSON series output."""
        _, out, _ = run(capsys, "series", "--which", "R1", "--max-degree", "3", "--format", "json")
        data = json.loads(out)
        assert [c["degree"] for c in data["components"]] == [0, 1, 2, 3]

    def test_unknown_series(self, capsys):
        """Test that an unknown series is a usage error."""
        code, _, _ = run(capsys, "series", "--which", "R3", "--max-degree", "2")
        assert code == EXIT_USAGE

    def test_negative_degree(self, capsys):
        """Test that a negative degree is a usage error."""
        code, _, _ = run(capsys, "series", "--which", "R1", "--max-degree", "-1")
        assert code == EXIT_USAGE


class TestTable:
    """Tests for `chowgen table`."""

    def test_text(self, capsys):
        """Test the text table."""
        code, out, _ = run(capsys, "table")
        assert code == EXIT_OK
        assert out.startswith("## r=1\n")
        assert "## r=3" in out

    def test_latex(self, capsys):
        """Test the LaTeX table."""
        code, out, _ = run(capsys, "table", "--format", "latex")
        assert code == EXIT_OK
        assert out.count(r"\begin{tabular}{|l|l|}") == 3

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        """Test that a wrong printed cell exits 1."""
        bad = dataclasses.replace(TABLE_ONE[2], ambient=("c_3", TABLE_ONE[2].ambient[1]))
        monkeypatch.setitem(TABLE_ONE, 2, bad)
        code, out, _ = run(capsys, "table", "--format", "json")
        assert code == EXIT_FAILED
        assert json.loads(out)["r=2"]["ambient"][0]["matches"] is False

    def test_json_carries_exact_alphas(self, capsys):
        """Test that alpha cells report their value before reduction mod 2c3."""
        _, out, _ = run(capsys, "table", "--format", "json")
        block = json.loads(out)["r=1"]

        alpha_21 = block["Z2"][1][0]
        assert alpha_21["name"] == "alpha_2,1^1"
        assert alpha_21["exact"] == "-2T^3 - c3"
        assert alpha_21["value"] == "-2T^3 + c3"
        assert "exact" not in block["Z2"][1][1]
        assert "exact" not in block["ambient"][0]

    def test_logs_discrepancies(self, capsys, temp_dir):
        """Test that alphas equal to the printed table only mod 2c3 are logged."""
        log_file = temp_dir / "table.log"
        code, _, _ = run(capsys, "--log-level", "INFO", "--log-file", str(log_file), "table")

        assert code == EXIT_OK
        log = log_file.read_text()
        assert "r=1 alpha_2,1^1: exact -2T^3 - c3, printed -2T^3+c_3" in log
        assert "r=1 alpha_2,2^1" in log


class TestGlobalOptions:
    """Tests for options shared by every command."""

    def test_version(self, capsys):
        """Test --version."""
        code, out, _ = run(capsys, "--version")
        assert code == EXIT_OK
        assert __version__ in out

    def test_missing_command(self, capsys):
        """Test that a missing command is a usage error."""
        code, _, _ = run(capsys)
        assert code == EXIT_USAGE

    def test_log_file(self, capsys, temp_dir):
        """Test logging to a file."""
        log_file = temp_dir / "chowgen.log"
        code, _, _ = run(
            capsys, "--log-level", "INFO", "--log-file", str(log_file), "verify", "--r-max", "1"
        )
        assert code == EXIT_OK
        assert "Starting verify" in log_file.read_text()

    def test_logs_stay_off_stdout(self, capsys):
        """Test that logs never reach stdout."""
        _, out, _ = run(capsys, "--log-level", "DEBUG", "series", "--which", "R1", "--max-degree", "1")
        assert out == "deg0: 2\ndeg1: 4T\n"


@pytest.mark.integration
class TestModuleEntryPoint:
    """Tests for the module entry point."""

    def test_python_m(self):
        """Test running as python -m chowgen."""
        src = Path(__file__).resolve().parent.parent / "src"
        env = {**os.environ, "PYTHONPATH": str(src)}
        result = subprocess.run(
            [sys.executable, "-m", "chowgen", "series", "--which", "R1", "--max-degree", "1"],
            capture_output=True,
            text=True,
            env=env,
            timeout=120,
        )
        assert result.returncode == 0
        assert result.stdout == "deg0: 2\ndeg1: 4T\n"
