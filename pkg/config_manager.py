"""
Centralized configuration manager to avoid multiple Config instances.
"""
import os
from typing import Optional

from core.config import Config

# Global config instance - loaded once
_config_instance: Optional[Config] = None


def get_config(path: Optional[str] = None) -> Config:
    """Get the global config instance, creating it only once.

    The file is taken from ``path``, else ``HSK_CONFIG``, else ``config.toml``.
    """
    global _config_instance
    if _config_instance is None:
        _config_instance = Config(config_file_path=path or os.environ.get('HSK_CONFIG', 'config.toml'))
    return _config_instance


def refresh_config(path: Optional[str] = None) -> Config:
    """Force a refresh of the global config instance."""
    global _config_instance
    _config_instance = None
    return get_config(path)
