"""
Square groups of unions of graphs.

This module provides wedge sums, the tree-extension construction of a
spanning tree compatible with every piece, detection of squares that no
single piece contains, and the van Kampen presentation of a union built
from the pieces' square presentations plus those cross squares.
"""

import logging
from collections import deque
from functools import reduce as fold
from typing import Dict, List, Optional, Sequence, Set, Tuple

from core.exceptions import ValidationError
from graphs import Graph, Square, SpanningTree, enumerate_squares, require_connected

from .edge_groups import edge_generator, square_presentation, walk_word
from .presentation import Presentation, Word, cyclic_key

logger = logging.getLogger(__name__)


class _UnionFind:
    def __init__(self):
        self.parent: Dict[str, str] = {}

    def find(self, v: str) -> str:
        self.parent.setdefault(v, v)
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u: str, v: str) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        self.parent[rv] = ru
        return True


def union_graph(gs: Sequence[Graph]) -> Graph:
    """Union of the pieces, vertex order by first appearance."""
    if not gs:
        raise ValidationError("at least one graph is required", field='graphs')
    return fold(lambda a, b: a.union(b), gs)


def wedge_sum(gs: Sequence[Graph], shared: str) -> Graph:
    """
    Glue graphs at a single common vertex.

    Args:
        gs: Graphs, each containing ``shared``, otherwise vertex-disjoint
        shared: Name of the common vertex

    Returns:
        The union graph; ``metadata['wedge']`` records the shared vertex and
        the vertex list of each piece

    Raises:
        ValidationError: If a piece lacks the shared vertex or two pieces
            overlap elsewhere
    """
    owner: Dict[str, int] = {}
    for i, g in enumerate(gs):
        if not g.has_vertex(shared):
            raise ValidationError(f"piece {i} does not contain the wedge vertex", field='shared', value=shared)
        for v in g.vertices:
            if v != shared and v in owner:
                raise ValidationError(f"vertex {v!r} occurs in pieces {owner[v]} and {i}",
                                      field='graphs', value=v)
            owner.setdefault(v, i)
    union = union_graph(gs)
    metadata = {'wedge': {'shared': shared, 'pieces': [list(g.vertices) for g in gs]}}
    return Graph(union.vertices, union.edges, metadata)


def cross_squares(gs: Sequence[Graph]) -> List[Square]:
    """Canonical squares of the union that lie in no single piece."""
    union = union_graph(gs)
    out = []
    for s in enumerate_squares(union):
        if not any(all(g.has_edge(u, v) for u, v in s.edges()) for g in gs):
            out.append(s)
    return out


def is_free_product_decomposition(gs: Sequence[Graph]) -> bool:
    """True when every square of the union lies inside one piece."""
    return not cross_squares(gs)


def _restriction(t: SpanningTree, g: Graph) -> List[Tuple[str, str]]:
    return [(u, v) for u, v in t.sorted_edges() if g.has_edge(u, v)]


def _restricts_to_spanning_tree(t: SpanningTree, g: Graph) -> bool:
    edges = _restriction(t, g)
    if len(edges) != len(g.vertices) - 1:
        return False
    uf = _UnionFind()
    for u, v in edges:
        uf.union(u, v)
    return len({uf.find(v) for v in g.vertices}) <= 1


def compatible_spanning_tree(gs: Sequence[Graph], root: Optional[str] = None) -> SpanningTree:
    """
    A spanning tree of the union whose restriction to every piece spans it.

    Edges shared by two or more pieces are taken first (breadth-first in
    union order), then each piece is completed in turn with its own edges.

    Raises:
        DisconnectedGraphError: If the union is not connected
        ValidationError: If the greedy extension closes a cycle, i.e. some
            piece cannot be spanned without breaking another
    """
    union = union_graph(gs)
    require_connected(union)
    for g in gs:
        require_connected(g)
    multiplicity: Dict[Tuple[str, str], int] = {}
    for g in gs:
        for e in g.undirected_edges():
            key = e if union.index(e[0]) <= union.index(e[1]) else (e[1], e[0])
            multiplicity[key] = multiplicity.get(key, 0) + 1

    chosen: List[Tuple[str, str]] = []
    global_uf = _UnionFind()
    shared = [e for e in union.undirected_edges() if multiplicity.get(e, 0) >= 2 and e[0] != e[1]]
    for u, v in _bfs_order(union, shared):
        if global_uf.union(u, v):
            chosen.append((u, v))

    for i, g in enumerate(gs):
        local = _UnionFind()
        for u, v in chosen:
            if g.has_edge(u, v):
                local.union(u, v)
        for u, v in _bfs_order(g, [e for e in g.undirected_edges() if e[0] != e[1]]):
            if local.find(u) == local.find(v):
                continue
            if not global_uf.union(u, v):
                raise ValidationError("no spanning tree of the union restricts to a spanning tree of every piece",
                                      field='graphs', value=i)
            local.union(u, v)
            chosen.append((u, v))

    root = root if root is not None else union.vertices[0]
    tree = SpanningTree.from_edges(union, chosen, root)
    logger.debug(f"Compatible spanning tree with {len(chosen)} edges over {len(gs)} piece(s)")
    return tree


def _bfs_order(g: Graph, edges: List[Tuple[str, str]]) -> List[Tuple[str, str]]:
    """``edges`` ordered by a breadth-first sweep from the first vertex of g."""
    if not g.vertices:
        return []
    start = g.vertices[0]
    rank = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in rank:
                rank[w] = len(rank)
                queue.append(w)
    return sorted(edges, key=lambda e: (min(rank.get(e[0], 0), rank.get(e[1], 0)),
                                        max(rank.get(e[0], 0), rank.get(e[1], 0))))


def van_kampen_presentation(gs: Sequence[Graph], t: SpanningTree) -> Presentation:
    """
    Square-group presentation of the union assembled from the pieces.

    Generators are the union's directed edges; relators are those of each
    piece's square presentation (with respect to the restriction of ``t``)
    plus one relator per cross square. Duplicates up to rotation and
    inversion are dropped.

    Args:
        gs: Pieces whose union is the graph of interest
        t: Spanning tree of the union

    Raises:
        ValidationError: If t does not restrict to a spanning tree of some piece
    """
    union = union_graph(gs)
    if set(t.graph.vertices) != set(union.vertices):
        raise ValidationError("tree does not span the union", field='tree')
    relators: List[Word] = []
    seen: Set[Word] = set()

    def add(w: Word) -> None:
        key = cyclic_key(w)
        if key not in seen:
            seen.add(key)
            relators.append(w)

    for i, g in enumerate(gs):
        if not _restricts_to_spanning_tree(t, g):
            raise ValidationError(f"tree does not restrict to a spanning tree of piece {i}",
                                  field='tree', value=i)
        root = t.root if g.has_vertex(t.root) else g.vertices[0]
        piece_tree = SpanningTree.from_edges(g, _restriction(t, g), root)
        for r in square_presentation(g, piece_tree).relators:
            add(r)
    extra = cross_squares(gs)
    for s in extra:
        add(walk_word(s.vertices))
    if extra:
        logger.info(f"Van Kampen presentation adds {len(extra)} cross square(s)")
    generators = tuple(edge_generator(u, v) for u, v in union.directed_edges())
    return Presentation(generators, tuple(relators))
