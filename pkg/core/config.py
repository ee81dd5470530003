"""
Configuration management for the homshift square kit.

This module provides a split configuration system: one dataclass per
concern (coset enumeration, simplification, covers, realization, probe,
logging), combined in a main Config that is loaded from a TOML file.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import List, Optional

import toml

from .exceptions import ConfigurationError


@dataclass
class EnumerationConfig:
    """Budgets for Todd-Coxeter coset enumeration."""

    max_cosets: int = 1_000_000

    def validate(self) -> List[str]:
        """Validate the enumeration configuration and return any errors."""
        errors = []
        if self.max_cosets <= 0:
            errors.append("max_cosets must be positive")
        return errors


@dataclass
class SimplifyConfig:
    """Budgets for Tietze simplification of presentations."""

    redundancy_depth: int = 4
    redundancy_states: int = 2_000

    def validate(self) -> List[str]:
        """Validate the simplification configuration and return any errors."""
        errors = []
        if self.redundancy_depth < 0:
            errors.append("redundancy_depth cannot be negative")
        if self.redundancy_states <= 0:
            errors.append("redundancy_states must be positive")
        return errors


@dataclass
class CoverConfig:
    """Budgets for truncated covers and square-rewriting search."""

    radius: int = 6
    rewrite_depth: int = 64
    rewrite_states: int = 20_000
    conjugate_tail: int = 2

    def validate(self) -> List[str]:
        """Validate the cover configuration and return any errors."""
        errors = []
        if self.radius < 0:
            errors.append("radius cannot be negative")
        if self.rewrite_depth < 0:
            errors.append("rewrite_depth cannot be negative")
        if self.rewrite_states <= 0:
            errors.append("rewrite_states must be positive")
        if self.conjugate_tail < 0:
            errors.append("conjugate_tail cannot be negative")
        return errors


@dataclass
class RealizationDefaults:
    """Defaults for the presentation-to-graph compiler."""

    petal: int = 6
    nu: str = 'zero'

    def validate(self) -> List[str]:
        """Validate the realization defaults and return any errors."""
        errors = []
        if self.petal < 6 or self.petal % 2:
            errors.append("petal must be an even integer >= 6")
        if self.nu not in ('zero', 'alternating'):
            errors.append("nu must be 'zero' or 'alternating'")
        return errors


@dataclass
class ProbeConfig:
    """Budgets and decision rule for the gluing-rate probe."""

    n_max: int = 10
    walk_cap: int = 500_000
    pair_cap: int = 50_000_000
    exact_cap: int = 50_000
    fit_points: int = 5
    residual_margin: float = 1.5

    def validate(self) -> List[str]:
        """Validate the probe configuration and return any errors."""
        errors = []
        if self.n_max < 1:
            errors.append("n_max must be at least 1")
        if self.walk_cap <= 0:
            errors.append("walk_cap must be positive")
        if self.pair_cap <= 0:
            errors.append("pair_cap must be positive")
        if self.exact_cap <= 0:
            errors.append("exact_cap must be positive")
        if self.fit_points < 3:
            errors.append("fit_points must be at least 3")
        if self.residual_margin < 1.0:
            errors.append("residual_margin must be >= 1.0")
        return errors


@dataclass
class LoggingConfig:
    """Logging level and optional log file."""

    level: str = 'INFO'
    log_file: Optional[str] = None

    def validate(self) -> List[str]:
        """Validate the logging configuration and return any errors."""
        errors = []
        if self.level.upper() not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"unknown logging level {self.level!r}")
        return errors


_SECTIONS = {
    'enumeration': EnumerationConfig,
    'simplify': SimplifyConfig,
    'cover': CoverConfig,
    'realization': RealizationDefaults,
    'probe': ProbeConfig,
    'log': LoggingConfig,
}


@dataclass
class Config:
    """Main configuration class that combines all configuration sections."""

    config_file_path: str = "config.toml"

    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    simplify: SimplifyConfig = field(default_factory=SimplifyConfig)
    cover: CoverConfig = field(default_factory=CoverConfig)
    realization: RealizationDefaults = field(default_factory=RealizationDefaults)
    probe: ProbeConfig = field(default_factory=ProbeConfig)
    log: LoggingConfig = field(default_factory=LoggingConfig)

    def __post_init__(self):
        """Load configuration when an instance is created."""
        self.load_config()

    def save_config(self) -> None:
        """Save current configuration to TOML file."""
        config_data = {}
        for name in _SECTIONS:
            section = {k: v for k, v in asdict(getattr(self, name)).items() if v is not None}
            config_data[name] = section

        try:
            with open(self.config_file_path, 'w') as f:
                toml.dump(config_data, f)
            logging.info(f"Configuration saved to {self.config_file_path}")
        except OSError as e:
            error_msg = f"Error saving configuration: {e}"
            logging.error(error_msg)
            raise ConfigurationError(error_msg, config_file=self.config_file_path) from e

    def load_config(self) -> None:
        """Load configuration from TOML file; a missing file keeps the defaults."""
        try:
            with open(self.config_file_path) as f:
                config_data = toml.load(f)
        except FileNotFoundError:
            logging.debug(f"{self.config_file_path} not found. Using default values.")
            return
        except toml.TomlDecodeError as e:
            error_msg = f"Error decoding {self.config_file_path}: {e}"
            logging.error(error_msg)
            raise ConfigurationError(error_msg, config_file=self.config_file_path) from e

        for name, section_type in _SECTIONS.items():
            if name not in config_data:
                continue
            section = getattr(self, name)
            known = section_type.__dataclass_fields__
            for key, value in config_data[name].items():
                if key not in known:
                    raise ConfigurationError(f"Unknown configuration key {name}.{key}",
                                             config_file=self.config_file_path, field=f"{name}.{key}")
                setattr(section, key, value)

        errors = self.validate()
        if errors:
            raise ConfigurationError("; ".join(errors), config_file=self.config_file_path)
        logging.debug(f"Configuration loaded from {self.config_file_path}")

    def validate(self) -> List[str]:
        """Validate all configuration sections and return any errors."""
        errors = []
        for name in _SECTIONS:
            errors.extend(getattr(self, name).validate())
        return errors
