"""
Integration Tests for the Command Line

Runs main() with argument lists and checks exit statuses and output of:
- count, convert, export, cells, volume
- cache build, load and clear
- error reporting
"""

import io
import sys

import orjson
import pytest

from app.main import EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK

pytestmark = pytest.mark.integration


class TestCount:
    """Tests for the count command"""

    def test_size_three(self, run_cli):
        """Test every count at n=3"""
        result = run_cli("count", "--n", "3")
        assert result.status == EXIT_OK
        assert result.json() == {
            "n": 3,
            "cc": 13,
            "synchronized": 6,
            "cells": 6,
            "trees": 5,
            "edges": 18,
            "formula": 13,
        }

    def test_above_cap(self, run_cli):
        """Test that a size above the cap is an error"""
        result = run_cli("count", "--n", "9")
        assert result.status == EXIT_ERROR
        assert "cap" in result.err

    def test_size_zero(self, run_cli):
        """Test that n must be positive"""
        assert run_cli("count", "--n", "0").status == EXIT_ERROR


class TestConvert:
    """Tests for the convert command"""

    def test_cc_to_tid(self, run_cli):
        """Test converting a coordinate to its diagram"""
        result = run_cli("convert", "--from", "cc", "--to", "tid", "--format", "text", "(2,0,-2,1)")
        assert result.status == EXIT_OK
        assert result.out.strip() == "2,0,0,1,0 0,0,0,2,0"

    def test_tid_to_cc(self, run_cli):
        """Test the size ten diagram"""
        result = run_cli(
            "convert", "--from", "tid", "--to", "cc", "--format", "text",
            "9,0,2,1,0,4,3,1,0,0 0,0,1,0,0,4,0,0,0,2",
        )
        assert result.out.strip() == "(9,-1,2,1,-4,4,3,1,-2)"

    def test_interval_poset_to_cc(self, run_cli):
        """Test reading an interval-poset payload"""
        payload = '{"n": 5, "decreasing": [[2, 1], [3, 1], [5, 4]], "increasing": [[2, 4], [3, 4]]}'
        result = run_cli("convert", "--from", "interval-poset", "--to", "cc", payload)
        assert result.json() == [2, 0, -2, 1]

    def test_cc_to_interval_poset(self, run_cli):
        """Test writing an interval-poset payload"""
        result = run_cli("convert", "--from", "cc", "--to", "interval-poset", "(2,0,-2,1)")
        assert result.json() == {
            "n": 5,
            "decreasing": [[2, 1], [3, 1], [5, 4]],
            "increasing": [[2, 4], [3, 4]],
        }

    def test_stdin(self, run_cli, monkeypatch):
        """Test reading the object from stdin"""
        monkeypatch.setattr(sys, "stdin", io.StringIO("(-1,1)\n"))
        result = run_cli("convert", "--from", "cc", "--to", "cc", "-")
        assert result.json() == [-1, 1]

    def test_invalid_object(self, run_cli):
        """Test that the violated condition is reported"""
        result = run_cli("convert", "--from", "tid", "--to", "cc", "1,1,0 0,0,0")
        assert result.status == EXIT_ERROR
        assert "tamari-(ii)" in result.err
        error = orjson.loads(result.err.strip().splitlines()[-1])
        assert error == {
            "success": False,
            "error_code": "InvalidObjectError",
            "message": error["message"],
            "condition": "tamari-(ii)",
            "witness": [1, 1],
        }


class TestExport:
    """Tests for the export command"""

    def test_json(self, run_cli):
        """Test the JSON realization"""
        result = run_cli("export", "--n", "3")
        data = result.json()
        assert len(data["vertices"]) == 13
        assert len(data["edges"]) == 18

    def test_dot_to_file(self, run_cli, tmp_path):
        """Test writing the DOT file"""
        target = tmp_path / "out" / "cc3.gv"
        result = run_cli("export", "--n", "3", "--format", "dot", "--output", str(target))
        assert result.status == EXIT_OK
        assert result.out == ""
        assert target.read_text().startswith("digraph cc3 {")


class TestCellsAndVolume:
    """Tests for the cells and volume commands"""

    def test_cells_json(self, run_cli):
        """Test the cells of size 3 with their Gamma image"""
        data = run_cli("cells", "--n", "3").json()
        assert len(data) == 6
        first = data[0]
        assert set(first) == {"min", "max", "gamma", "volume"}
        assert {tuple(cell["gamma"]) for cell in data} == {
            (-1, -2), (-1, 1), (1, -2), (1, -1), (2, 1), (2, -1),
        }

    def test_cells_text(self, run_cli):
        """Test the text listing"""
        result = run_cli("cells", "--n", "2", "--format", "text")
        assert result.out.splitlines() == ["<(-1),(0)> gamma=(-1)", "<(0),(1)> gamma=(1)"]

    def test_volume_text(self, run_cli):
        """Test one line per cell and the total"""
        lines = run_cli("volume", "--n", "3").out.splitlines()
        assert len(lines) == 7
        assert "(-1,-2) (0,0) 2" in lines
        assert lines[-1] == "total 8"

    def test_volume_json(self, run_cli):
        """Test the JSON volume report"""
        data = run_cli("volume", "--n", "4", "--format", "json").json()
        assert len(data["cells"]) == 22
        assert data["total"] == sum(cell["volume"] for cell in data["cells"])


class TestCache:
    """Tests for the cache command"""

    def test_build_load_clear(self, run_cli, cache_dir):
        """Test the three cache actions in turn"""
        built = run_cli("cache", "build", "--n", "3").json()
        assert built["counts"] == {"cc": 13, "tid": 13, "trees": 5, "cells": 6}
        assert (cache_dir / "cc-n3.jsonl").exists()

        loaded = run_cli("cache", "load", "--n", "3", "--repr", "cc").json()
        assert loaded["counts"] == {"cc": 13}

        cleared = run_cli("cache", "clear").json()
        assert cleared["removed"] == 4
        assert not (cache_dir / "cc-n3.jsonl").exists()

    def test_corrupted_file_is_rebuilt(self, run_cli, tmp_path):
        """Test that a tampered file is rebuilt on load"""
        directory = tmp_path / "corrupt"
        run_cli("cache", "build", "--n", "2", "--repr", "cc", "--cache-dir", str(directory))
        path = directory / "cc-n2.jsonl"
        lines = path.read_text().splitlines()
        lines[1] = "[7]"
        path.write_text("\n".join(lines) + "\n")

        from app.core import cache as cache_module

        cache_module._caches.clear()
        result = run_cli("cache", "load", "--n", "2", "--repr", "cc", "--cache-dir", str(directory))
        assert result.status == EXIT_OK
        assert result.json()["stats"]["rebuilds"] == 1
        assert "rebuilding" in result.err

    def test_load_needs_size(self, run_cli):
        """Test that build and load need --n"""
        assert run_cli("cache", "load").status == EXIT_ERROR


class TestArguments:
    """Tests for argument handling"""

    def test_unknown_command(self, run_cli):
        """Test that argparse rejects unknown commands"""
        with pytest.raises(SystemExit):
            run_cli("frobnicate")

    def test_cap_override(self, run_cli):
        """Test that --cap-override lifts the cap"""
        result = run_cli("count", "--n", "2", "--cap-override")
        assert result.status == EXIT_OK

    def test_debug_lowers_the_log_level(self, run_cli, monkeypatch):
        """Test that DEBUG=true logs at debug unless --log-level is given"""
        from app import main as main_module
        from app.core.config import get_settings

        levels = []
        monkeypatch.setattr(get_settings(), "debug", True)
        monkeypatch.setattr(main_module, "configure_logging", lambda level, log_file: levels.append(level))
        run_cli("count", "--n", "1")
        run_cli("count", "--n", "1", "--log-level", "ERROR")
        assert levels == ["DEBUG", "ERROR"]


class TestCheck:
    """Tests for the check command"""

    def test_passing_suite(self, run_cli):
        """Test a passing suite at n=2"""
        result = run_cli("check", "--suite", "bijections", "--n", "2")
        assert result.status == EXIT_OK
        assert result.json()["passed"] is True

    def test_failing_suite(self, run_cli, monkeypatch):
        """Test that a failed report exits with status 1"""
        from app.cli.commands import check as check_command
        from app.schemas.schemas import CheckReport, CheckSuiteEnum

        def failing_run(self, suite, n, cap_override=False):
            return CheckReport(suite=suite, n=n, passed=False, checks=1, failures=["forced"])

        monkeypatch.setattr(check_command.CheckService, "run", failing_run)
        result = run_cli("check", "--suite", CheckSuiteEnum.LATTICE.value, "--n", "2")
        assert result.status == EXIT_CHECK_FAILED
        assert result.json()["failures"] == ["forced"]
