"""
Edge-generated presentations of the fundamental and square groups.

Every directed edge (u, v) of the graph is a generator named ``u->v``; a
self-loop contributes the single generator ``a->a``. Relators:

- each tree edge, in both orientations, is trivial;
- each edge times its reverse is trivial (a self-loop squares to 1);
- for the square group, each canonical square e0 e1 e2 e3 is trivial.
"""

import logging
from typing import List, Sequence, Tuple

from core.exceptions import ValidationError
from graphs import Graph, SpanningTree, enumerate_squares, require_connected

from .presentation import Presentation, Word

logger = logging.getLogger(__name__)


def edge_generator(u: str, v: str) -> str:
    """Generator symbol of the directed edge (u, v)."""
    return f"{u}->{v}"


def edge_of_generator(name: str) -> Tuple[str, str]:
    """Inverse of ``edge_generator``."""
    u, _, v = name.partition('->')
    return u, v


def walk_word(vertices: Sequence[str]) -> Word:
    """The edge word e1 e2 ... of a walk given by its vertices."""
    return tuple((edge_generator(vertices[i], vertices[i + 1]), 1) for i in range(len(vertices) - 1))


def _edge_generators(g: Graph) -> Tuple[str, ...]:
    return tuple(edge_generator(u, v) for u, v in g.directed_edges())


def _fundamental_relators(g: Graph, t: SpanningTree) -> List[Word]:
    relators: List[Word] = []
    for u, v in t.sorted_edges():
        relators.append(((edge_generator(u, v), 1),))
        relators.append(((edge_generator(v, u), 1),))
    for u, v in g.undirected_edges():
        if u == v:
            relators.append(((edge_generator(u, u), 1), (edge_generator(u, u), 1)))
        else:
            relators.append(((edge_generator(u, v), 1), (edge_generator(v, u), 1)))
    return relators


def _check_tree(g: Graph, t: SpanningTree) -> None:
    if t.graph is g:
        return
    if set(t.graph.vertices) != set(g.vertices) or any(not g.has_edge(u, v) for u, v in t.edges):
        raise ValidationError("spanning tree does not belong to this graph", field='tree')


def fundamental_presentation(g: Graph, t: SpanningTree) -> Presentation:
    """
    <E_G : R_T(G)>, a presentation of the fundamental group.

    Args:
        g: A connected graph
        t: Spanning tree of g

    Returns:
        Presentation on the directed-edge generators
    """
    _check_tree(g, t)
    return Presentation(_edge_generators(g), tuple(_fundamental_relators(g, t)))


def square_presentation(g: Graph, t: SpanningTree) -> Presentation:
    """
    <E_G : R_T(G) plus one relator per square>, a presentation of the square group.

    Args:
        g: A connected graph
        t: Spanning tree of g

    Returns:
        Presentation on the directed-edge generators
    """
    _check_tree(g, t)
    relators = _fundamental_relators(g, t)
    squares = enumerate_squares(g)
    relators.extend(walk_word(s.vertices) for s in squares)
    logger.debug(f"Square presentation: {len(g.edges)} generators, {len(squares)} square relator(s)")
    return Presentation(_edge_generators(g), tuple(relators))


def classify_fundamental(g: Graph) -> Tuple[int, int]:
    """
    The fundamental group is F_k * (Z/2)^{*n}.

    Returns:
        (k, n) with n the number of self-loops and k the cycle rank of the
        loop-free part: non-loop edges - vertices + 1

    Raises:
        DisconnectedGraphError: If g is not connected
    """
    require_connected(g)
    n = len(g.loops())
    k = (g.edge_count - n) - len(g.vertices) + 1
    return k, n
