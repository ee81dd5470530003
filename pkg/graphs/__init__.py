"""
Graph and walk primitives for the homshift square kit.

This module provides finite undirected graphs with self-loops, spanning
trees, square enumeration and the walk algebra (reduce, star, inverse,
tree paths, cycle insertion).
"""

from .graph import (
    BipartiteResult,
    Graph,
    SpanningTree,
    connected_components,
    distances_from,
    graph_from_dict,
    is_bipartite,
    is_connected,
    is_mixing,
    parse_graph,
    require_connected,
    spanning_tree,
)
from .library import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    loop_graph,
    path_graph,
    single_vertex,
    square_c4,
    triangle_with_loop,
    with_first_loop,
)
from .squares import Square, canonical_square, enumerate_squares, iter_oriented_squares
from .walks import (
    NonBacktrackingWalk,
    Walk,
    insert_cycle,
    inverse,
    is_non_backtracking,
    reduce,
    reduce_sequence,
    star,
    tree_path,
)

__all__ = [
    # Graphs
    'BipartiteResult',
    'Graph',
    'SpanningTree',
    'connected_components',
    'distances_from',
    'graph_from_dict',
    'is_bipartite',
    'is_connected',
    'is_mixing',
    'parse_graph',
    'require_connected',
    'spanning_tree',

    # Named graphs
    'bowtie_graph',
    'complete_graph',
    'cycle_graph',
    'loop_graph',
    'path_graph',
    'single_vertex',
    'square_c4',
    'triangle_with_loop',
    'with_first_loop',

    # Squares
    'Square',
    'canonical_square',
    'enumerate_squares',
    'iter_oriented_squares',

    # Walks
    'NonBacktrackingWalk',
    'Walk',
    'insert_cycle',
    'inverse',
    'is_non_backtracking',
    'reduce',
    'reduce_sequence',
    'star',
    'tree_path',
]

__version__ = "1.0.0"
