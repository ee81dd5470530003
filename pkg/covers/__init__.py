"""
Graph covers for the homshift square kit.

This module provides covering-map verification, walk lifting,
universal-cover balls, exact and truncated square covers, square
equivalence with replayable certificates and deck transformations.
"""

from .cover import (
    EXACT,
    TRUNCATED,
    Cover,
    CoveringCheck,
    check_covering_map,
    cover_from_dict,
    identity_cover,
    lift_step,
    lift_walk,
    parse_cover,
)
from .equivalence import Equivalent, EquivalenceOutcome, Inequivalent, SquareMove, Undecided, square_equivalent
from .square_cover import (
    RewriteBudget,
    check_square_lifting,
    deck_group,
    deck_transformation,
    fiber_vertex,
    square_cover,
)
from .universal import universal_cover_ball, walk_name

__all__ = [
    # Covers
    'EXACT',
    'TRUNCATED',
    'Cover',
    'CoveringCheck',
    'check_covering_map',
    'cover_from_dict',
    'identity_cover',
    'lift_step',
    'lift_walk',
    'parse_cover',

    # Universal cover
    'universal_cover_ball',
    'walk_name',

    # Square equivalence
    'EquivalenceOutcome',
    'Equivalent',
    'Inequivalent',
    'SquareMove',
    'Undecided',
    'square_equivalent',

    # Square covers
    'RewriteBudget',
    'check_square_lifting',
    'deck_group',
    'deck_transformation',
    'fiber_vertex',
    'square_cover',
]

__version__ = "1.0.0"
