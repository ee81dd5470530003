"""
Finite undirected graphs with self-loops.

This module provides the Graph value type used throughout the kit, together
with JSON parsing and serialization, connectivity and bipartiteness checks,
deterministic breadth-first spanning trees and DOT export.

Vertex identifiers are opaque strings ordered by declaration; every
tie-break (BFS order, square canonicalization) uses that order.
"""

import json
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.exceptions import DisconnectedGraphError, GraphFormatError, ValidationError

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]

DOT_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


@dataclass(frozen=True)
class Graph:
    """
    A finite undirected graph, stored as a symmetric set of ordered pairs.

    A self-loop ``(a, a)`` is stored once and is its own reverse.
    ``metadata`` is free-form provenance (wedge structure, construction
    counts) and takes no part in equality.
    """

    vertices: Tuple[str, ...]
    edges: FrozenSet[Edge]
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if not isinstance(v, str):
                raise ValidationError("vertex identifiers must be strings", field='vertices', value=v)
            if v in seen:
                raise ValidationError(f"duplicate vertex identifier {v!r}", field='vertices', value=v)
            seen.add(v)
        for u, v in self.edges:
            if u not in seen or v not in seen:
                missing = u if u not in seen else v
                raise ValidationError(f"dangling endpoint {missing!r}", field='edges', value=(u, v))
            if (v, u) not in self.edges:
                raise ValidationError("edge set is not symmetric", field='edges', value=(u, v))

        index = {v: i for i, v in enumerate(self.vertices)}
        adjacency: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
        for v in adjacency:
            adjacency[v].sort(key=index.__getitem__)
        object.__setattr__(self, '_index', index)
        object.__setattr__(self, '_adjacency', {v: tuple(ns) for v, ns in adjacency.items()})

    # ------------------------------------------------------------------ construction

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[Sequence[str]],
                   metadata: Optional[Mapping[str, Any]] = None) -> 'Graph':
        """
        Build a graph from undirected edges; each pair is symmetrized.

        Parallel edges collapse to one, with a warning.
        """
        directed = set()
        duplicates = 0
        for pair in edges:
            u, v = pair
            if (u, v) in directed:
                duplicates += 1
                continue
            directed.add((u, v))
            directed.add((v, u))
        if duplicates:
            logger.warning(f"Collapsed {duplicates} parallel edge(s)")
        return cls(tuple(vertices), frozenset(directed), dict(metadata or {}))

    def relabel(self, mapping: Mapping[str, str]) -> 'Graph':
        """Return a copy with vertices renamed through ``mapping`` (unmapped names kept)."""
        rename = lambda v: mapping.get(v, v)  # noqa: E731
        return Graph(tuple(rename(v) for v in self.vertices),
                     frozenset((rename(u), rename(v)) for u, v in self.edges),
                     dict(self.metadata))

    def union(self, other: 'Graph') -> 'Graph':
        """Union of vertex and edge sets; vertex order is self's, then other's new vertices."""
        order = list(self.vertices) + [v for v in other.vertices if v not in self._index]
        return Graph(tuple(order), self.edges | other.edges)

    def with_edges(self, extra: Iterable[Edge]) -> 'Graph':
        """Return a copy with extra undirected edges added."""
        directed = set(self.edges)
        for u, v in extra:
            directed.add((u, v))
            directed.add((v, u))
        return Graph(self.vertices, frozenset(directed), dict(self.metadata))

    def without_edge(self, u: str, v: str) -> 'Graph':
        """Return a copy with the undirected edge {u, v} removed."""
        if (u, v) not in self.edges:
            raise ValidationError(f"edge ({u}, {v}) is not in the graph", field='edge', value=(u, v))
        return Graph(self.vertices, self.edges - {(u, v), (v, u)}, dict(self.metadata))

    # ------------------------------------------------------------------ queries

    def neighbors(self, v: str) -> Tuple[str, ...]:
        """Neighbours of ``v`` in vertex order (includes ``v`` itself when looped)."""
        return self._adjacency[v]

    def index(self, v: str) -> int:
        """Declaration position of ``v``."""
        return self._index[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges

    def undirected_edges(self) -> List[Edge]:
        """Each undirected edge once, as (u, v) with u not after v, in vertex order."""
        out = [(u, v) for u, v in self.edges if self._index[u] <= self._index[v]]
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def directed_edges(self) -> List[Edge]:
        """All ordered pairs, sorted by vertex order."""
        return sorted(self.edges, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def loops(self) -> List[str]:
        """Vertices carrying a self-loop, in vertex order."""
        return [v for v in self.vertices if (v, v) in self.edges]

    @property
    def edge_count(self) -> int:
        """Undirected edge count, self-loops counted once."""
        return len(self.undirected_edges())

    def __len__(self) -> int:
        return len(self.vertices)

    # ------------------------------------------------------------------ serialization

    def to_dict(self) -> Dict[str, Any]:
        """Graph-file object with each undirected edge listed once."""
        return {
            'vertices': list(self.vertices),
            'edges': [[u, v] for u, v in self.undirected_edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self, name: str = 'G', fibers: Optional[Mapping[str, str]] = None,
               base_order: Optional[Sequence[str]] = None) -> str:
        """
        Render as an undirected DOT graph.

        Args:
            name: Graph name
            fibers: Optional vertex -> base vertex map; vertices are coloured by fiber
            base_order: Base vertex order used to pick fiber colours

        Returns:
            DOT source text
        """
        lines = [f'graph "{name}" {{']
        colour_index: Dict[str, int] = {}
        if fibers is not None:
            order = list(base_order) if base_order is not None else sorted(set(fibers.values()))
            colour_index = {b: i for i, b in enumerate(order)}
        for v in self.vertices:
            if fibers is not None and v in fibers:
                colour = DOT_PALETTE[colour_index[fibers[v]] % len(DOT_PALETTE)]
                lines.append(f'  "{v}" [style=filled, fillcolor="{colour}", label="{v}\\n{fibers[v]}"];')
            else:
                lines.append(f'  "{v}";')
        for u, v in self.undirected_edges():
            lines.append(f'  "{u}" -- "{v}";')
        lines.append('}')
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """
    Parse graph-file content.

    Args:
        text: JSON object with "vertices" (unique strings) and "edges"
            (2-arrays of vertex names, each undirected edge listed once)

    Returns:
        The symmetrized Graph

    Raises:
        GraphFormatError: On syntax errors (with line/column) or bad structure
        ValidationError: On dangling endpoints or duplicate vertex identifiers
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"graph file syntax error: {e.msg}", position=f"line {e.lineno} column {e.colno}") from e
    return graph_from_dict(data)


def graph_from_dict(data: Any) -> Graph:
    """Build a Graph from an already-decoded graph-file object."""
    if not isinstance(data, dict) or 'vertices' not in data or 'edges' not in data:
        raise GraphFormatError("graph file must be an object with 'vertices' and 'edges'")
    vertices = data['vertices']
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError("'vertices' must be an array of strings")
    edges = data['edges']
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be an array")
    known = set()
    for v in vertices:
        if v in known:
            raise ValidationError(f"duplicate vertex identifier {v!r}", field='vertices', value=v)
        known.add(v)
    pairs = []
    for i, pair in enumerate(edges):
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(x, str) for x in pair):
            raise GraphFormatError("each edge must be a 2-array of vertex names", position=f"edges[{i}]")
        for endpoint in pair:
            if endpoint not in known:
                raise ValidationError(f"dangling endpoint {endpoint!r}", field=f"edges[{i}]", value=endpoint)
        pairs.append((pair[0], pair[1]))
    return Graph.from_edges(vertices, pairs)


# ---------------------------------------------------------------------- traversal

def distances_from(g: Graph, source: str) -> Dict[str, int]:
    """BFS distances from ``source`` to every reachable vertex."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> List[List[str]]:
    """Vertex sets of the connected components, each in vertex order."""
    seen: set = set()
    components = []
    for v in g.vertices:
        if v in seen:
            continue
        reach = distances_from(g, v)
        seen.update(reach)
        components.append(sorted(reach, key=g.index))
    return components


def is_connected(g: Graph) -> bool:
    """True iff every pair of vertices is joined by a walk (vacuous for ≤1 vertex)."""
    if len(g.vertices) <= 1:
        return True
    return len(distances_from(g, g.vertices[0])) == len(g.vertices)


def require_connected(g: Graph) -> None:
    """Raise DisconnectedGraphError unless ``g`` is connected."""
    if not is_connected(g):
        raise DisconnectedGraphError(components=len(connected_components(g)))


@dataclass(frozen=True)
class BipartiteResult:
    """Outcome of a bipartiteness check: a 2-colouring, or an odd closed walk."""

    is_bipartite: bool
    coloring: Optional[Dict[str, int]] = None
    odd_cycle: Optional[Tuple[str, ...]] = None

    def __bool__(self) -> bool:
        return self.is_bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    """
    Two-colour a connected graph by BFS.

    Returns:
        BipartiteResult with a colouring, or with an odd cycle witness (a
        closed walk of odd length; a self-loop ``a`` gives ``(a, a)``)

    Raises:
        DisconnectedGraphError: If the graph is not connected
    """
    require_connected(g)
    if not g.vertices:
        return BipartiteResult(True, {})
    root = g.vertices[0]
    colour = {root: 0}
    parent: Dict[str, Optional[str]] = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in colour:
                colour[w] = 1 - colour[u]
                parent[w] = u
                queue.append(w)
            elif colour[w] == colour[u]:
                return BipartiteResult(False, odd_cycle=_odd_cycle(parent, u, w))
    return BipartiteResult(True, colour)


def _odd_cycle(parent: Dict[str, Optional[str]], u: str, w: str) -> Tuple[str, ...]:
    """Close the tree paths to u and w through the edge (u, w)."""
    def up(v):
        chain = [v]
        while parent[chain[-1]] is not None:
            chain.append(parent[chain[-1]])
        return chain
    pu, pw = up(u), up(w)
    on_w_side = set(pw)
    lca = next(v for v in pu if v in on_w_side)
    left = pu[:pu.index(lca) + 1]
    right = pw[:pw.index(lca)]
    return tuple(reversed(left)) + tuple(right) + (lca,)


def is_mixing(g: Graph) -> bool:
    """A homshift on ``g`` is topologically mixing iff g is connected and not bipartite."""
    return is_connected(g) and not is_bipartite(g).is_bipartite


# ---------------------------------------------------------------------- spanning trees

@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of ``graph`` given by undirected edges and a root."""

    graph: Graph = field(compare=False, repr=False)
    edges: FrozenSet[Edge]
    root: str

    def __post_init__(self):
        g = self.graph
        if not g.has_vertex(self.root):
            raise ValidationError(f"unknown root {self.root!r}", field='root', value=self.root)
        adjacency: Dict[str, List[str]] = {v: [] for v in g.vertices}
        undirected = set()
        for u, v in self.edges:
            if u == v or not g.has_edge(u, v):
                raise ValidationError(f"tree edge ({u}, {v}) is not a non-loop edge of the graph",
                                      field='edges', value=(u, v))
            key = (u, v) if g.index(u) < g.index(v) else (v, u)
            if key in undirected:
                continue
            undirected.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        if len(undirected) != len(g.vertices) - 1:
            raise ValidationError("tree edges do not form a spanning tree",
                                  field='edges', details={'edges': len(undirected), 'vertices': len(g.vertices)})
        parent: Dict[str, Optional[str]] = {self.root: None}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for w in sorted(adjacency[u], key=g.index):
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        if len(parent) != len(g.vertices):
            raise ValidationError("tree edges do not span the graph", field='edges')
        object.__setattr__(self, 'edges', frozenset(undirected))
        object.__setattr__(self, '_parent', parent)

    @classmethod
    def from_edges(cls, graph: Graph, edges: Iterable[Sequence[str]], root: str) -> 'SpanningTree':
        """Build a tree from explicit undirected edges."""
        return cls(graph, frozenset((u, v) for u, v in edges), root)

    def parent(self, v: str) -> Optional[str]:
        """Parent of ``v`` towards the root (None at the root)."""
        return self._parent[v]

    def contains(self, u: str, v: str) -> bool:
        """Whether the undirected edge {u, v} is a tree edge."""
        return (u, v) in self.edges or (v, u) in self.edges

    def path_to_root(self, v: str) -> List[str]:
        """Vertices from ``v`` up to the root, inclusive."""
        chain = [v]
        while self._parent[chain[-1]] is not None:
            chain.append(self._parent[chain[-1]])
        return chain

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges, key=lambda e: (self.graph.index(e[0]), self.graph.index(e[1])))


def spanning_tree(g: Graph, root: Optional[str] = None) -> SpanningTree:
    """
    Deterministic breadth-first spanning tree.

    Args:
        g: A connected graph
        root: Root vertex (defaults to the first vertex)

    Returns:
        The BFS tree, neighbours visited in vertex order

    Raises:
        DisconnectedGraphError: If g is not connected
        ValidationError: If the root is unknown
    """
    if root is None:
        if not g.vertices:
            raise ValidationError("cannot build a spanning tree of an empty graph")
        root = g.vertices[0]
    if not g.has_vertex(root):
        raise ValidationError(f"unknown root {root!r}", field='root', value=root)
    require_connected(g)
    seen = {root}
    tree_edges = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                tree_edges.append((u, w))
                queue.append(w)
    return SpanningTree(g, frozenset(tree_edges), root)
