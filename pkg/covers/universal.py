"""
Balls of the universal cover.

Vertices of the universal cover based at ``a`` are the non-backtracking
walks starting at ``a``; two walks are adjacent when one extends the other
by a single step, and a walk projects to its terminal vertex.
"""

import logging
from collections import deque
from typing import Dict, List, Sequence, Tuple

from core.exceptions import ValidationError
from graphs import Graph, require_connected

from .cover import TRUNCATED, Cover

logger = logging.getLogger(__name__)

WALK_SEPARATOR = '.'


def walk_name(vertices: Sequence[str]) -> str:
    """Vertex name of a walk in a universal-cover ball."""
    return WALK_SEPARATOR.join(vertices)


def universal_cover_ball(g: Graph, base: str, radius: int) -> Cover:
    """
    Non-backtracking walks from ``base`` of length at most ``radius``.

    Args:
        g: A connected graph
        base: Base vertex
        radius: Maximum walk length (>= 0)

    Returns:
        Truncated Cover whose basepoint is the empty walk at ``base``;
        ``total.metadata['walks']`` maps each vertex name to its walk
    """
    if radius < 0:
        raise ValidationError("radius must be non-negative", field='radius', value=radius)
    if not g.has_vertex(base):
        raise ValidationError(f"unknown base vertex {base!r}", field='base', value=base)
    require_connected(g)
    start = (base,)
    walks: Dict[str, Tuple[str, ...]] = {walk_name(start): start}
    order: List[str] = [walk_name(start)]
    edges: List[Tuple[str, str]] = []
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if len(w) - 1 >= radius:
            continue
        for x in g.neighbors(w[-1]):
            if len(w) >= 2 and x == w[-2]:
                continue
            nxt = w + (x,)
            name = walk_name(nxt)
            walks[name] = nxt
            order.append(name)
            edges.append((walk_name(w), name))
            queue.append(nxt)
    total = Graph.from_edges(order, edges, {'walks': walks})
    projection = {name: w[-1] for name, w in walks.items()}
    depth = {name: len(w) - 1 for name, w in walks.items()}
    logger.debug(f"Universal cover ball at {base!r}, radius {radius}: {len(order)} vertices")
    return Cover(total, g, projection, TRUNCATED, radius, walk_name(start), depth)
