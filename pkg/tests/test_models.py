"""
Tests for the data models.
"""

import pytest
from pydantic import ValidationError

from latin_bitrades.models import (
    BitradeDiagnostics,
    CdhCheck,
    RunConfig,
    TauCheck,
    TradeReport,
    yes_no,
)


class TestModels:
    """Test cases for report and configuration models."""

    def test_yes_no(self):
        assert [yes_no(True), yes_no(False), yes_no(None)] == ["yes", "no", "none"]

    def test_trade_report_lines(self):
        # Arrange
        report = TradeReport(
            size=12,
            k=3,
            orthogonal_predicted=True,
            orthogonal_direct=True,
            group_order=12,
            stab_full=1,
            stab_row=3,
            stab_col=3,
            stab_sym=3,
            entry_transitive=True,
        )

        # Act
        lines = report.to_lines()

        # Assert
        assert lines == [
            "size=12 k=3 orthogonal=yes",
            "orthogonal_predicted=yes",
            "orthogonal_direct=yes",
            "group_order=12",
            "stabilizers=full:1 row:3 col:3 sym:3",
            "entry_transitive=yes",
        ]

    def test_non_homogeneous_summary(self):
        assert TradeReport(size=6, orthogonal_direct=False).summary_line() == "size=6 k=none orthogonal=no"

    def test_diagnostics_valid(self):
        diagnostics = BitradeDiagnostics(nonempty=True, same_size=True, disjoint=True, same_shape=True)

        assert diagnostics.valid
        assert diagnostics.failures() == []

    def test_failed_conditions(self):
        assert TauCheck(c1=False, c2=True, c3=False).failed_conditions() == ["C1", "C3"]
        assert CdhCheck(g1=True, g2_ab=False, g2_ac=True, g2_bc=True).failed_conditions() == ["G2(a,b)"]

    def test_run_config_normalizes_format(self):
        cfg = RunConfig(subcommand="construct", output_format="JSON")

        assert cfg.output_format == "json"
        assert cfg.method == "both"

    @pytest.mark.parametrize(
        "overrides",
        [{"output_format": "xml"}, {"search_nodes": 0}, {"method": "guess"}],
    )
    def test_run_config_rejects(self, overrides):
        with pytest.raises(ValidationError):
            RunConfig(subcommand="verify", **overrides)
