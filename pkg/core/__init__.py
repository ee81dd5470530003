"""
Core infrastructure module for the homshift square kit.

This module provides the foundational components including configuration
management, logging setup, and custom exceptions.
"""

from .config import (
    Config,
    CoverConfig,
    EnumerationConfig,
    LoggingConfig,
    ProbeConfig,
    RealizationDefaults,
    SimplifyConfig,
)
from .exceptions import (
    BudgetExceededError,
    ConfigurationError,
    CoverError,
    DisconnectedGraphError,
    GraphFormatError,
    HomshiftError,
    LiftError,
    PatternError,
    PresentationError,
    RealizationError,
    TruncationBoundaryError,
    ValidationError,
    WalkError,
)
from .logging_config import configure_logging, set_log_level, setup_logging

__all__ = [
    # Configuration
    'Config',
    'CoverConfig',
    'EnumerationConfig',
    'LoggingConfig',
    'ProbeConfig',
    'RealizationDefaults',
    'SimplifyConfig',

    # Exceptions
    'BudgetExceededError',
    'ConfigurationError',
    'CoverError',
    'DisconnectedGraphError',
    'GraphFormatError',
    'HomshiftError',
    'LiftError',
    'PatternError',
    'PresentationError',
    'RealizationError',
    'TruncationBoundaryError',
    'ValidationError',
    'WalkError',

    # Logging
    'configure_logging',
    'set_log_level',
    'setup_logging',
]

# Version info
__version__ = "1.0.0"
