"""
Two-dimensional homshift tooling.

This module provides pattern admissibility and lifting with obstruction
detection, strip graphs G_n with their diameter kernels, and the
gluing-rate probe.
"""

from .patterns import (
    Admissibility,
    Obstruction,
    Pattern,
    counterexample_pattern,
    is_locally_admissible,
    lift_pattern,
    parse_pattern,
    random_admissible_pattern,
)
from .probe import (
    BOUNDED,
    INCONCLUSIVE,
    LINEAR,
    LOGARITHMIC,
    Classification,
    ProbeReport,
    ProbeRow,
    classify_diameters,
    expected_growth,
    gluing_rate_probe,
)
from .strips import DiameterResult, StripGraph, adjacency_matrix, diameter, strip_graph, walk_count

__all__ = [
    # Patterns
    'Admissibility',
    'Obstruction',
    'Pattern',
    'counterexample_pattern',
    'is_locally_admissible',
    'lift_pattern',
    'parse_pattern',
    'random_admissible_pattern',

    # Strip graphs and diameters
    'DiameterResult',
    'StripGraph',
    'adjacency_matrix',
    'diameter',
    'strip_graph',
    'walk_count',

    # Probe
    'BOUNDED',
    'INCONCLUSIVE',
    'LINEAR',
    'LOGARITHMIC',
    'Classification',
    'ProbeReport',
    'ProbeRow',
    'classify_diameters',
    'expected_growth',
    'gluing_rate_probe',
]

__version__ = "1.0.0"
