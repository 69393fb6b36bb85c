"""
Pytest Configuration and Shared Fixtures

This module provides shared fixtures for all tests including:
- An isolated cache directory per session and per test
- A command line runner returning exit status and parsed output
- Small enumerations used across modules
"""

import os
import tempfile

import orjson
import pytest

# Set test environment before importing app
os.environ["CACHE_DIR"] = tempfile.mkdtemp(prefix="cubic-cache-")
os.environ["LOG_LEVEL"] = "WARNING"

from app.core.cache import EnumerationCache
from app.domain.cubic import enumerate_cc
from app.main import main


# ============================================
# Cache Fixtures
# ============================================

@pytest.fixture
def cache_dir(tmp_path):
    """Fresh cache directory for one test."""
    directory = tmp_path / "cache"
    directory.mkdir()
    return directory


@pytest.fixture
def enumeration_cache(cache_dir):
    """Cache writing into the per-test directory."""
    return EnumerationCache(cache_dir)


# ============================================
# Command Line Fixtures
# ============================================

class CliResult:
    """Exit status and captured streams of one command."""

    def __init__(self, status, out, err):
        self.status = status
        self.out = out
        self.err = err

    def json(self):
        return orjson.loads(self.out)


@pytest.fixture
def run_cli(capsys, cache_dir):
    """Run main() with an isolated cache directory."""
    def _run(*argv):
        args = list(argv)
        if "--cache-dir" not in args:
            args += ["--cache-dir", str(cache_dir)]
        status = main(args)
        captured = capsys.readouterr()
        return CliResult(status, captured.out, captured.err)

    return _run


# ============================================
# Enumerations
# ============================================

@pytest.fixture(scope="session")
def cc3():
    """The 13 cubic coordinates of size 3."""
    return enumerate_cc(3)


@pytest.fixture(scope="session")
def cc4():
    """The 68 cubic coordinates of size 4."""
    return enumerate_cc(4)
