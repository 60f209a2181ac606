"""
Tests for the configuration loader.
"""

import pytest
import yaml

from latin_bitrades.utils.config_loader import BUDGET_ENV_VAR, ConfigLoader


@pytest.fixture
def config_file(tmp_path):
    def write(payload):
        path = tmp_path / "config.yaml"
        path.write_text(yaml.safe_dump(payload))
        return str(path)

    return write


class TestConfigLoader:
    """Test cases for ConfigLoader."""

    def test_load_and_validate(self, config_file, monkeypatch):
        # Arrange
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        path = config_file({"budgets": {"closure_cap": 500, "search_nodes": 1000}, "output": {"format": "json"}})

        # Act
        config = ConfigLoader.load_and_validate_config(path)

        # Assert
        assert config["budgets"] == {"closure_cap": 500, "search_nodes": 1000}
        assert config["output"]["format"] == "json"

    def test_environment_overrides_search_budget(self, config_file, monkeypatch):
        # Arrange
        monkeypatch.setenv(BUDGET_ENV_VAR, "250")
        path = config_file({"budgets": {"closure_cap": 500, "search_nodes": 1000}, "output": {}})

        # Act
        config = ConfigLoader.load_and_validate_config(path)

        # Assert
        assert config["budgets"]["search_nodes"] == 250

    @pytest.mark.parametrize("raw", ["many", "0", "-3"])
    def test_bad_environment_budget(self, raw, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV_VAR, raw)

        with pytest.raises(ValueError) as excinfo:
            ConfigLoader.apply_environment_overrides(ConfigLoader.get_builtin_config())

        assert BUDGET_ENV_VAR in str(excinfo.value)

    def test_missing_section(self):
        with pytest.raises(ValueError) as excinfo:
            ConfigLoader.validate_config({"budgets": {"closure_cap": 1, "search_nodes": 1}})

        assert "Missing required configuration section: output" in str(excinfo.value)

    def test_invalid_budget(self):
        config = ConfigLoader.get_builtin_config()
        config["budgets"]["closure_cap"] = "lots"

        with pytest.raises(ValueError) as excinfo:
            ConfigLoader.validate_config(config)

        assert "closure_cap" in str(excinfo.value)

    def test_invalid_format(self):
        config = ConfigLoader.get_builtin_config()
        config["output"]["format"] = "xml"

        with pytest.raises(ValueError) as excinfo:
            ConfigLoader.validate_config(config)

        assert "Unsupported output format" in str(excinfo.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ConfigLoader.load_config(str(tmp_path / "absent.yaml"))

    def test_repository_config_is_valid(self, monkeypatch):
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)

        config = ConfigLoader.load_and_validate_config()

        assert config["output"]["format"] == "overlay"
        assert config["budgets"]["search_nodes"] == 10_000_000
