"""
Tests for the bitrade exporters.
"""

import json

import pytest

from latin_bitrades.core.partial_latin_square import Bitrade
from latin_bitrades.exporters.csv_exporter import CSV_COLUMNS, CsvExporter
from latin_bitrades.exporters.exporter_factory import ExporterFactory
from latin_bitrades.exporters.json_exporter import JsonExporter
from latin_bitrades.exporters.overlay_exporter import OverlayExporter


class TestExporterFactory:
    """Test cases for ExporterFactory."""

    @pytest.mark.parametrize(
        "fmt, expected",
        [("overlay", OverlayExporter), ("json", JsonExporter), ("csv", CsvExporter), ("CSV", CsvExporter)],
    )
    def test_create_exporter(self, fmt, expected):
        # Act
        exporter = ExporterFactory.create_exporter(fmt)

        # Assert
        assert isinstance(exporter, expected)
        assert exporter.get_format_name() == fmt.lower()

    def test_create_exporter_unsupported(self):
        # Act & Assert
        with pytest.raises(ValueError) as excinfo:
            ExporterFactory.create_exporter("xml")

        assert "Unsupported output format" in str(excinfo.value)


class TestExporters:
    """Test cases for the three output formats."""

    def test_csv_dataframe(self, intercalate):
        # Act
        frame = CsvExporter().to_dataframe(intercalate)

        # Assert
        assert list(frame.columns) == CSV_COLUMNS
        assert len(frame) == 8
        assert frame["component"].value_counts().to_dict() == {"T": 4, "T'": 4}
        assert frame.iloc[0].tolist() == ["T", 0, 0, 0]

    def test_json_is_sorted(self, intercalate):
        payload = json.loads(JsonExporter().render(intercalate))

        assert payload["n"] == 3
        assert payload["t"] == [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
        assert payload["t_mate"][0] == [0, 0, 1]

    def test_overlay_without_square(self, intercalate):
        text = OverlayExporter().render(intercalate)

        assert text.splitlines() == ["0/1 1/0 .", "1/0 0/1 .", ". . ."]

    def test_overlay_with_square(self, klein_square):
        # Arrange
        bitrade = Bitrade.from_entries(
            4,
            [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)],
            [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)],
        )

        # Act
        text = OverlayExporter().render(bitrade, klein_square)

        # Assert
        assert text.splitlines()[0] == "0/1 1/0 2 3"
        assert text.splitlines()[3] == "3 2 1 0"

    def test_export_writes_file(self, intercalate, tmp_path):
        # Act
        path = ExporterFactory.create_exporter("json").export(intercalate, tmp_path / "out" / "b.json")

        # Assert
        assert path.exists()
        assert json.loads(path.read_text())["n"] == 3
