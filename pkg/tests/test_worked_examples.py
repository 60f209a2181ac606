"""
Tests for the worked example catalogue.
"""

import pytest

from latin_bitrades.catalogue.worked_examples import (
    EXAMPLE_IDS,
    build_example,
    check_example,
    describe_mismatch,
    load_golden,
    published_group,
)
from latin_bitrades.utils.errors import GoldenMismatchError, PreconditionError


class TestWorkedExamples:
    """Test cases for rebuilding the worked examples."""

    @pytest.mark.parametrize("number", EXAMPLE_IDS)
    def test_matches_golden(self, number):
        # Act
        example = check_example(number)

        # Assert
        assert example.output == load_golden(number)

    def test_composition(self):
        assert build_example(1).output == "((013),(01),(12);(12))\n"

    def test_mersenne_example_is_minimal(self):
        report = build_example(6).construction.report

        assert report.minimal == "yes"
        assert report.summary_line() == "size=21 k=3 orthogonal=yes"

    def test_unknown_example(self):
        with pytest.raises(PreconditionError):
            build_example(8)

    def test_unknown_published_group(self):
        with pytest.raises(ValueError) as excinfo:
            published_group("xor16-aut")

        assert "Unsupported group" in str(excinfo.value)


class TestDescribeMismatch:
    """Test cases for describe_mismatch."""

    def test_identical(self):
        golden = load_golden(3)

        assert describe_mismatch(golden, golden) is None

    def test_names_the_first_differing_cell(self):
        golden = load_golden(3)

        problem = describe_mismatch(golden, golden.replace("0/1", "0/2", 1))

        assert problem == "row 0, column 0: expected '0/1', got '0/2'"

    def test_names_the_first_differing_report_line(self):
        golden = load_golden(3)

        problem = describe_mismatch(golden, golden.replace("k=3", "k=4"))

        assert problem.startswith("line 5: expected 'size=12 k=3 orthogonal=yes'")

    def test_mismatch_error_exit_code(self):
        assert GoldenMismatchError("x").exit_code == 3
