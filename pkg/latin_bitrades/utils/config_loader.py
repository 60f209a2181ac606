"""
Configuration Loader Module

This module provides functionality for loading and validating configuration.
"""

import os
import yaml
from typing import Dict, Any, Optional

from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

BUDGET_ENV_VAR = "BITRADE_BUDGET"
OUTPUT_FORMATS = ("overlay", "json", "csv")


class ConfigLoader:
    """Configuration loader for the toolkit."""

    @staticmethod
    def load_config(config_path: str) -> Dict[str, Any]:
        """
        Load configuration from a YAML file.

        Args:
            config_path: Path to the configuration file

        Returns:
            Dictionary containing configuration

        Raises:
            FileNotFoundError: If the configuration file doesn't exist
            yaml.YAMLError: If the configuration file is not valid YAML
        """
        if not os.path.exists(config_path):
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        try:
            with open(config_path, 'r') as file:
                config = yaml.safe_load(file) or {}
                logger.info(f"Loaded configuration from {config_path}")
                return config
        except yaml.YAMLError as e:
            logger.error(f"Error parsing configuration file: {str(e)}")
            raise

    @staticmethod
    def validate_config(config: Dict[str, Any]) -> None:
        """
        Validate the configuration.

        Args:
            config: Dictionary containing configuration

        Raises:
            ValueError: If the configuration is invalid
        """
        required_sections = ["budgets", "output"]
        for section in required_sections:
            if section not in config:
                raise ValueError(f"Missing required configuration section: {section}")

        budgets = config.get("budgets") or {}
        for key in ("closure_cap", "search_nodes"):
            value = budgets.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ValueError(f"Budget '{key}' must be a positive integer, got {value!r}")

        output_format = (config.get("output") or {}).get("format", "overlay")
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unsupported output format: {output_format}. Supported formats: {list(OUTPUT_FORMATS)}")

        logger.debug("Configuration validation successful")

    @staticmethod
    def apply_environment_overrides(config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Apply the BITRADE_BUDGET environment variable to the search budget.

        Args:
            config: Dictionary containing configuration

        Returns:
            The same dictionary, updated in place

        Raises:
            ValueError: If the environment variable is not a positive integer
        """
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None or raw.strip() == "":
            return config

        try:
            budget = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
        if budget <= 0:
            raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {budget}")

        config.setdefault("budgets", {})["search_nodes"] = budget
        logger.info(f"Search budget overridden from {BUDGET_ENV_VAR}: {budget}")
        return config

    @staticmethod
    def get_default_config_path() -> str:
        """
        Get the default configuration file path.

        Returns:
            Default configuration file path
        """
        package_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        return os.path.join(os.path.dirname(package_dir), "config", "config.yaml")

    @staticmethod
    def get_builtin_config() -> Dict[str, Any]:
        """
        Get the configuration used when no config file is available.

        Returns:
            Dictionary with default budgets, output and logging sections
        """
        return {
            "budgets": {"closure_cap": 1_000_000, "search_nodes": 10_000_000},
            "output": {"format": "overlay"},
            "logging": {"level": "WARNING"},
        }

    @staticmethod
    def load_and_validate_config(config_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Load and validate configuration.

        Args:
            config_path: Path to the configuration file, or None to use default

        Returns:
            Dictionary containing validated configuration
        """
        if not config_path:
            config_path = ConfigLoader.get_default_config_path()
            if not os.path.exists(config_path):
                logger.debug(f"No configuration at {config_path}, using built-in defaults")
                config = ConfigLoader.get_builtin_config()
                ConfigLoader.apply_environment_overrides(config)
                ConfigLoader.validate_config(config)
                return config

        config = ConfigLoader.load_config(config_path)
        ConfigLoader.apply_environment_overrides(config)
        ConfigLoader.validate_config(config)
        return config
