"""
End-to-End Acceptance Tests

Runs the check suites and the counting commands the way a user would and
compares against known values:
- Every suite passes at small sizes
- Counts of coordinates, synchronized coordinates and cells
- Total cell volumes
- Shelling certificates
"""

import orjson
import pytest

from app.domain.cubic import CubicCoordinate
from app.domain.shelling import increasing_chain, weakly_decreasing_chain
from app.main import EXIT_OK
from app.schemas.schemas import CheckSuiteEnum
from app.services.check_service import CheckService

pytestmark = pytest.mark.e2e

COUNTS = {
    1: (1, 1),
    2: (3, 2),
    3: (13, 6),
    4: (68, 22),
    5: (399, 91),
    6: (2530, 408),
}


class TestSuites:
    """Tests for the check suites"""

    @pytest.mark.parametrize("suite", [s.value for s in CheckSuiteEnum])
    def test_suite_passes_at_three(self, run_cli, suite):
        """Test every suite up to n=3"""
        result = run_cli("check", "--suite", suite, "--n", "3")
        report = result.json()
        assert result.status == EXIT_OK, report["failures"]
        assert report["passed"]
        assert report["checks"] > 0

    def test_volume_totals(self):
        """Test the total cell volume per size"""
        report = CheckService().run(CheckSuiteEnum.VOLUMES, 3)
        assert report.passed
        assert report.details["total_volume"] == {"1": 1, "2": 2, "3": 8}

    @pytest.mark.parametrize(
        "suite", [CheckSuiteEnum.BIJECTIONS, CheckSuiteEnum.CELLS, CheckSuiteEnum.VOLUMES]
    )
    def test_suite_passes_at_five(self, suite):
        """Test the bijection, cell and volume suites up to n=5"""
        report = CheckService().run(suite, 5)
        assert report.passed, report.failures
        assert report.checks > 0

    @pytest.mark.slow
    def test_all_suites_at_four(self):
        """Test every suite up to n=4"""
        report = CheckService().run(CheckSuiteEnum.ALL, 4)
        assert report.passed, report.failures


class TestCounts:
    """Tests for the enumeration counts"""

    @pytest.mark.parametrize("n", sorted(COUNTS))
    def test_counts(self, run_cli, n):
        """Test coordinates against the formula and cells against synchronized"""
        data = run_cli("count", "--n", str(n)).json()
        coordinates, synchronized = COUNTS[n]
        assert data["cc"] == data["formula"] == coordinates
        assert data["synchronized"] == data["cells"] == synchronized


class TestCertificates:
    """Tests for shelling certificates"""

    def test_certificate_file(self, run_cli, tmp_path):
        """Test the certificate file written next to the report"""
        target = tmp_path / "certificates.json"
        result = run_cli("check", "--suite", "shelling", "--n", "3", "--certificates", str(target))
        assert result.status == EXIT_OK

        data = orjson.loads(target.read_bytes())
        assert data["n"] == 3
        assert data["full"] is True
        assert len(data["certificates"]) == data["pairs"]
        bottom_to_top = next(
            cert for cert in data["certificates"]
            if cert["from"] == [-1, -2] and cert["to"] == [2, 1]
        )
        assert bottom_to_top["labels"] == [
            [-1, 1, -1], [-1, 2, -2], [-1, 2, -1], [1, 1, 0], [1, 1, 1], [1, 2, 0],
        ]


class TestChainLengths:
    """Tests for chains of different lengths in one interval"""

    def test_lengths_differ(self):
        """Test that [(0,0), (2,1)] has maximal chains of lengths 2 and 3"""
        low, high = CubicCoordinate.of(0, 0), CubicCoordinate.of(2, 1)
        assert increasing_chain(low, high).length == 3
        assert weakly_decreasing_chain(low, high).length == 2
