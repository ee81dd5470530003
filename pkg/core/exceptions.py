"""
Custom exceptions for the homshift square kit.

This module defines application-specific exceptions that carry a context
dictionary, so that callers (and the CLI) can report what failed and where.
"""

from typing import Any, Optional


class HomshiftError(Exception):
    """Base exception for all homshift square kit errors."""

    def __init__(self, message: str, context: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} (Context: {context_str})"
        return self.message


class ConfigurationError(HomshiftError):
    """Raised when there are issues with configuration loading or validation."""

    def __init__(self, message: str, config_file: Optional[str] = None, field: Optional[str] = None):
        context = {}
        if config_file:
            context['config_file'] = config_file
        if field:
            context['field'] = field
        super().__init__(message, context)


class ValidationError(HomshiftError):
    """Raised when an input object violates its invariants."""

    def __init__(self, message: str, field: Optional[str] = None, value: Optional[Any] = None,
                 details: Optional[dict] = None):
        context = {}
        if field:
            context['field'] = field
        if value is not None:
            context['value'] = str(value)
        if details:
            context.update(details)
        super().__init__(message, context)


class GraphFormatError(ValidationError):
    """Raised when a graph, cover or pattern file cannot be parsed."""

    def __init__(self, message: str, position: Optional[str] = None, details: Optional[dict] = None):
        super().__init__(message, field='position' if position else None, value=position, details=details)


class DisconnectedGraphError(ValidationError):
    """Raised when an analysis requiring a connected graph receives a disconnected one."""

    def __init__(self, message: str = "graph is not connected", components: Optional[int] = None):
        details = {'components': components} if components is not None else None
        super().__init__(message, details=details)


class WalkError(ValidationError):
    """Raised for invalid walks and endpoint mismatches."""


class PresentationError(ValidationError):
    """Raised for malformed presentations or unknown generator symbols."""


class PatternError(ValidationError):
    """Raised for patterns that are not admissible or reference unknown vertices."""


class RealizationError(ValidationError):
    """Raised when the realization construction receives unusable input."""


class CoverError(ValidationError):
    """Raised when a cover is inconsistent with its base graph."""


class LiftError(ValidationError):
    """Raised when a walk or pattern cannot be lifted from the requested start."""


class BudgetExceededError(HomshiftError):
    """Raised when a configured search or size budget is exhausted."""

    def __init__(self, message: str, budget: Optional[int] = None, used: Optional[int] = None,
                 details: Optional[dict] = None):
        context: dict = {}
        if budget is not None:
            context['budget'] = budget
        if used is not None:
            context['used'] = used
        if details:
            context.update(details)
        super().__init__(message, context)
        self.budget = budget
        self.used = used


class TruncationBoundaryError(BudgetExceededError):
    """Raised when a lift would leave the verified radius of a truncated cover."""
