"""
Square covers, square lifting and deck transformations.

When the square group enumerates to a closed coset table, the square cover
is built exactly as a derived graph: the fiber over each base vertex is the
set of cosets, and the base edge (u, v) joins (c, u) to (c . beta(u, v), v)
where beta(u, v) is the image of the edge generator in the simplified
presentation. Otherwise a truncated ball of the square cover is grown by
breadth-first search over square-equivalence classes of walks.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.exceptions import CoverError, LiftError
from graphs import Graph, SpanningTree, Walk, enumerate_squares
from graphs.walks import invert_sequence
from groups import SquareGroupAnalysis, analyze_square_group, edge_generator, free_reduce

from .cover import EXACT, TRUNCATED, Cover, CoveringCheck, lift_walk
from .equivalence import Equivalent, Inequivalent, square_equivalent
from .universal import walk_name

logger = logging.getLogger(__name__)


def fiber_vertex(base_vertex: str, coset: int) -> str:
    """Name of the fiber coordinate (coset, base vertex) in an exact square cover."""
    return f"{base_vertex}@{coset}"


@dataclass(frozen=True)
class RewriteBudget:
    """Bounds for the square-rewriting search used by truncated covers."""

    depth: int = 64
    max_states: int = 20_000
    conjugate_tail: int = 2


def square_cover(g: Graph, t: Optional[SpanningTree] = None, max_cosets: int = 1_000_000, radius: int = 6,
                 analysis: Optional[SquareGroupAnalysis] = None,
                 budget: Optional[RewriteBudget] = None) -> Cover:
    """
    The square cover of ``g``, exact when the square group enumerates.

    Args:
        g: A connected graph
        t: Spanning tree (BFS tree from the first vertex by default)
        max_cosets: Enumeration budget
        radius: Radius of the truncated fallback ball
        analysis: Precomputed analysis (its tree is used)
        budget: Rewriting budget of the fallback

    Returns:
        Exact cover with n * |V| vertices, or a truncated ball
    """
    if analysis is None:
        analysis = analyze_square_group(g, max_cosets=max_cosets, tree=t)
    if analysis.is_finite:
        return _exact_square_cover(g, analysis)
    logger.warning(f"Square group enumeration inconclusive; falling back to a truncated ball of radius {radius}")
    return _truncated_square_cover(g, analysis, radius, budget or RewriteBudget())


def _exact_square_cover(g: Graph, analysis: SquareGroupAnalysis) -> Cover:
    table = analysis.outcome.table
    n = table.order
    images = {(u, v): analysis.tietze.image(((edge_generator(u, v), 1),)) for u, v in g.directed_edges()}
    vertices = [fiber_vertex(u, c) for c in range(n) for u in g.vertices]
    edges = []
    for c in range(n):
        for u, v in g.directed_edges():
            edges.append((fiber_vertex(u, c), fiber_vertex(v, table.act(c, images[(u, v)]))))
    coordinates = {fiber_vertex(u, c): (c, u) for c in range(n) for u in g.vertices}
    total = Graph(tuple(vertices), frozenset(edges) | frozenset((b, a) for a, b in edges),
                  {'fiber_coordinates': coordinates, 'order': n})
    projection = {name: u for name, (_, u) in coordinates.items()}
    logger.info(f"Exact square cover: {n} coset(s) x {len(g.vertices)} vertices")
    return Cover(total, g, projection, EXACT, basepoint=fiber_vertex(analysis.tree.root, 0))


def _truncated_square_cover(g: Graph, analysis: SquareGroupAnalysis, radius: int, budget: RewriteBudget) -> Cover:
    root = analysis.tree.root
    start = (root,)
    reps: Dict[str, Tuple[str, ...]] = {walk_name(start): start}
    named: Dict[Tuple[str, ...], str] = {start: walk_name(start)}
    by_end: Dict[str, List[str]] = {root: [walk_name(start)]}
    depth = {walk_name(start): 0}
    order = [walk_name(start)]
    edges = []
    has_squares = bool(enumerate_squares(g))
    queue = deque([walk_name(start)])
    undecided = 0
    while queue:
        name = queue.popleft()
        if depth[name] >= radius:
            continue
        w = reps[name]
        for x in g.neighbors(w[-1]):
            candidate = w[:-1] if len(w) >= 2 and w[-2] == x else w + (x,)
            match = named.get(candidate)
            if match is None and has_squares:
                for other in by_end.get(x, ()):
                    outcome = _same_class(g, analysis, candidate, reps[other], budget)
                    if outcome is True:
                        match = other
                        break
                    if outcome is None:
                        undecided += 1
            if match is None:
                match = walk_name(candidate)
                reps[match] = candidate
                named[candidate] = match
                by_end.setdefault(x, []).append(match)
                depth[match] = depth[name] + 1
                order.append(match)
                queue.append(match)
            edges.append((name, match))
    if undecided:
        logger.warning(f"{undecided} class comparison(s) undecided; treated as distinct")
    total = Graph(tuple(order), frozenset(edges) | frozenset((b, a) for a, b in edges), {'walks': reps})
    projection = {name: w[-1] for name, w in reps.items()}
    logger.info(f"Truncated square cover of radius {radius}: {len(order)} vertices")
    return Cover(total, g, projection, TRUNCATED, radius, walk_name(start), depth)


def _same_class(g: Graph, analysis: SquareGroupAnalysis, p: Tuple[str, ...], q: Tuple[str, ...],
                budget: RewriteBudget) -> Optional[bool]:
    """True, False, or None when undecided."""
    if p == q:
        return True
    if not free_reduce(analysis.walk_image(p + invert_sequence(q)[1:])):
        return True
    outcome = square_equivalent(g, Walk(g, p), Walk(g, q), budget.depth, analysis=analysis,
                                max_states=budget.max_states, conjugate_tail=budget.conjugate_tail)
    if isinstance(outcome, Equivalent):
        return True
    if isinstance(outcome, Inequivalent):
        return False
    return None


def check_square_lifting(c: Cover) -> CoveringCheck:
    """
    Verify that every square of the base lifts to a closed square.

    Each square is tried in all eight orientations from every fiber vertex
    over its first vertex; truncated covers only use fiber vertices at depth
    radius - 4 or less, so the lift stays inside the verified region.

    Returns:
        CoveringCheck with a witness naming the square, start and lifted end
    """
    for s in enumerate_squares(c.base):
        for variant in s.variants():
            walk = Walk(c.base, variant)
            for v in c.fiber(variant[0]):
                if c.is_truncated and c.depth[v] > c.radius - 4:
                    continue
                try:
                    lifted = lift_walk(c, walk, v)
                except LiftError as e:
                    return CoveringCheck(False, {'square': list(variant), 'start': v, 'reason': e.message})
                if lifted.end != v:
                    return CoveringCheck(False, {'square': list(variant), 'start': v, 'end': lifted.end})
    return CoveringCheck(True)


def deck_transformation(c: Cover, v: str, w: str) -> Optional[Dict[str, str]]:
    """
    The deck transformation sending ``v`` to ``w``, if one exists.

    The map is propagated along lifts by breadth-first search; it is
    unique when it exists.

    Returns:
        Vertex map of the automorphism, or None when propagation conflicts
        or the result is not a bijective graph automorphism

    Raises:
        CoverError: If v and w lie in different fibers or c is truncated
    """
    if c.is_truncated:
        raise CoverError("deck transformations need an exact cover", field='provenance', value=c.provenance)
    if c.projection[v] != c.projection[w]:
        raise CoverError("vertices lie in different fibers", details={'v': v, 'w': w})
    eta = {v: w}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in c.total.neighbors(x):
            targets = [z for z in c.total.neighbors(eta[x]) if c.projection[z] == c.projection[y]]
            if len(targets) != 1:
                return None
            if y in eta:
                if eta[y] != targets[0]:
                    return None
                continue
            eta[y] = targets[0]
            queue.append(y)
    if len(eta) != len(c.total.vertices) or len(set(eta.values())) != len(eta):
        return None
    if any(not c.total.has_edge(eta[a], eta[b]) for a, b in c.total.edges):
        return None
    return eta


def deck_group(c: Cover, base_vertex: Optional[str] = None) -> List[Dict[str, str]]:
    """All deck transformations, one per reachable image of a fixed fiber vertex."""
    b = base_vertex if base_vertex is not None else c.base.vertices[0]
    fiber = c.fiber(b)
    if not fiber:
        return []
    found = []
    for w in fiber:
        eta = deck_transformation(c, fiber[0], w)
        if eta is not None:
            found.append(eta)
    return found
