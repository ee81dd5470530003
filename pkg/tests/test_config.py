"""
Tests for the TOML configuration and the global config manager.
"""
import os
import sys

import pytest
import toml

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import config_manager
from config_manager import get_config, refresh_config
from core.config import Config, ProbeConfig, RealizationDefaults
from core.exceptions import ConfigurationError


@pytest.fixture
def config_path(tmp_path):
    """Path of a not-yet-written config file."""
    return tmp_path / "hsk.toml"


class TestConfigDefaults:
    """Test defaults when no file exists."""

    def test_missing_file_keeps_defaults(self, config_path):
        config = Config(config_file_path=str(config_path))
        assert config.enumeration.max_cosets == 1_000_000
        assert config.cover.radius == 6
        assert config.realization.petal == 6
        assert config.probe.n_max == 10
        assert config.probe.pair_cap == 50_000_000
        assert config.log.level == 'INFO'
        assert config.validate() == []

    def test_shipped_file_is_valid(self):
        root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        config = Config(config_file_path=os.path.join(root, 'config.toml'))
        assert config.validate() == []
        assert config.probe.residual_margin == 1.5


class TestConfigLoading:
    """Test loading sections from TOML."""

    def test_partial_override(self, config_path):
        config_path.write_text(toml.dumps({'probe': {'n_max': 4, 'walk_cap': 1000},
                                           'enumeration': {'max_cosets': 500}}))
        config = Config(config_file_path=str(config_path))
        assert config.probe.n_max == 4
        assert config.probe.walk_cap == 1000
        assert config.probe.fit_points == 5
        assert config.enumeration.max_cosets == 500

    def test_unknown_key(self, config_path):
        config_path.write_text("[cover]\nradiuss = 3\n")
        with pytest.raises(ConfigurationError) as exc:
            Config(config_file_path=str(config_path))
        assert exc.value.context['field'] == 'cover.radiuss'

    def test_decode_error(self, config_path):
        config_path.write_text("[probe\nn_max = 3\n")
        with pytest.raises(ConfigurationError):
            Config(config_file_path=str(config_path))

    def test_invalid_value(self, config_path):
        config_path.write_text("[realization]\npetal = 5\n")
        with pytest.raises(ConfigurationError) as exc:
            Config(config_file_path=str(config_path))
        assert 'petal' in exc.value.message

    def test_save_round_trip(self, config_path):
        config = Config(config_file_path=str(config_path))
        config.cover.rewrite_depth = 12
        config.realization.nu = 'alternating'
        config.save_config()
        reloaded = Config(config_file_path=str(config_path))
        assert reloaded.cover.rewrite_depth == 12
        assert reloaded.realization.nu == 'alternating'
        assert 'log_file' not in toml.load(config_path)['log']


class TestSectionValidation:
    """Test per-section validation rules."""

    def test_probe_rules(self):
        assert ProbeConfig(fit_points=2).validate() == ["fit_points must be at least 3"]
        assert ProbeConfig(residual_margin=0.5).validate() == ["residual_margin must be >= 1.0"]
        assert ProbeConfig(pair_cap=0).validate() == ["pair_cap must be positive"]

    def test_realization_rules(self):
        assert RealizationDefaults(nu='explicit').validate()
        assert RealizationDefaults(petal=8).validate() == []


class TestConfigManager:
    """Test the global config instance."""

    def test_singleton(self):
        assert get_config() is get_config()

    def test_environment_path(self, config_path, monkeypatch):
        config_path.write_text("[probe]\nn_max = 7\n")
        monkeypatch.setenv('HSK_CONFIG', str(config_path))
        assert refresh_config().probe.n_max == 7

    def test_explicit_path_wins(self, config_path, tmp_path, monkeypatch):
        config_path.write_text("[probe]\nn_max = 7\n")
        other = tmp_path / "other.toml"
        other.write_text("[probe]\nn_max = 3\n")
        monkeypatch.setenv('HSK_CONFIG', str(other))
        assert refresh_config(str(config_path)).probe.n_max == 7

    def test_refresh_replaces_instance(self):
        first = get_config()
        assert refresh_config() is not first
        assert config_manager._config_instance is not first
