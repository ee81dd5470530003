"""
Group presentations for the homshift square kit.

This module provides finitely presented groups, Tietze simplification,
abelianization, Todd-Coxeter coset enumeration and the edge presentations
of fundamental and square groups of graphs, including van Kampen unions.
"""

from .abelian import AbelianInvariants, abelianization, has_infinite_order_image
from .coset_table import CosetTable, EnumerationOutcome, Finite, Unknown, action_of_word, enumerate_cosets
from .edge_groups import (
    classify_fundamental,
    edge_generator,
    edge_of_generator,
    fundamental_presentation,
    square_presentation,
    walk_word,
)
from .presentation import (
    Presentation,
    Word,
    cyclic_key,
    cyclic_reduce,
    format_word,
    free_factors,
    free_product,
    free_reduce,
    invert_word,
    parse_presentation,
    parse_word,
    substitute,
)
from .square_group import SquareGroupAnalysis, analyze_square_group, order_of_square_group
from .tietze import SimplifyEffort, TietzeResult, simplify, tietze_reduce
from .van_kampen import (
    compatible_spanning_tree,
    cross_squares,
    is_free_product_decomposition,
    union_graph,
    van_kampen_presentation,
    wedge_sum,
)

__all__ = [
    # Presentations
    'Presentation',
    'Word',
    'cyclic_key',
    'cyclic_reduce',
    'format_word',
    'free_factors',
    'free_product',
    'free_reduce',
    'invert_word',
    'parse_presentation',
    'parse_word',
    'substitute',

    # Simplification
    'SimplifyEffort',
    'TietzeResult',
    'simplify',
    'tietze_reduce',

    # Abelianization
    'AbelianInvariants',
    'abelianization',
    'has_infinite_order_image',

    # Coset enumeration
    'CosetTable',
    'EnumerationOutcome',
    'Finite',
    'Unknown',
    'action_of_word',
    'enumerate_cosets',

    # Graph groups
    'SquareGroupAnalysis',
    'analyze_square_group',
    'classify_fundamental',
    'compatible_spanning_tree',
    'cross_squares',
    'edge_generator',
    'edge_of_generator',
    'fundamental_presentation',
    'is_free_product_decomposition',
    'order_of_square_group',
    'square_presentation',
    'union_graph',
    'van_kampen_presentation',
    'walk_word',
    'wedge_sum',
]

__version__ = "1.0.0"
