"""
Realization of group presentations as square groups of graphs.

This module provides flat quadrangulations with boundary peeling, the
presentation-to-graph compiler with its verification report, and the
self-loop construction.
"""

from .quadrangulation import FlatQuadrangulation, peel_boundary_edge, quadrangulate_cycle
from .realize import (
    OMEGA,
    RealizationConfig,
    RealizationReport,
    add_self_loop,
    petal_vertex,
    realize,
    reduce_presentation_input,
    relation_vertex,
    self_loop_presentation,
    squares_within_pieces,
    verify_realization,
)

__all__ = [
    'FlatQuadrangulation',
    'OMEGA',
    'RealizationConfig',
    'RealizationReport',
    'add_self_loop',
    'peel_boundary_edge',
    'petal_vertex',
    'quadrangulate_cycle',
    'realize',
    'reduce_presentation_input',
    'relation_vertex',
    'self_loop_presentation',
    'squares_within_pieces',
    'verify_realization',
]

__version__ = "1.0.0"
