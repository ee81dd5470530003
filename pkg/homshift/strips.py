"""
Strip graphs and diameter kernels.

The strip graph G_n has the walks of length n on a base graph as vertices;
two walks are adjacent when they are adjacent position by position. It is
built level by level with numpy: a walk of length k + 1 is a walk of
length k plus one step, and two extended walks are adjacent exactly when
their prefixes are adjacent and their last vertices are. The result is a
``scipy.sparse`` adjacency matrix.

Diameters are computed with ``scipy.sparse.csgraph``: exactly with the
iFUB bound-tightening scheme, or as a lower bound from repeated double
sweeps.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from core.exceptions import BudgetExceededError, ValidationError
from covers import walk_name
from graphs import Graph

logger = logging.getLogger(__name__)

SOURCE_BATCH = 256


def walk_count(g: Graph, n: int) -> int:
    """Number of walks of length ``n`` on ``g`` (exact integer)."""
    counts = {v: 1 for v in g.vertices}
    for _ in range(n):
        counts = {v: sum(counts[w] for w in g.neighbors(v)) for v in g.vertices}
    return sum(counts.values())


class StripGraph:
    """
    The strip graph G_n of a base graph.

    Walks are stored as rows of an integer matrix of base vertex indices;
    strip vertex i is row i.
    """

    def __init__(self, base: Graph, n: int, walks: np.ndarray, adjacency: sparse.csr_matrix):
        self.base = base
        self.n = n
        self.walks = walks
        self.adjacency = adjacency
        self._lookup: Optional[Dict[Tuple[str, ...], int]] = None

    @property
    def vertex_count(self) -> int:
        return int(self.walks.shape[0])

    @property
    def edge_count(self) -> int:
        """Undirected edges, self-loops counted once."""
        loops = int(self.adjacency.diagonal().sum())
        return (int(self.adjacency.nnz) - loops) // 2 + loops

    def walk(self, i: int) -> Tuple[str, ...]:
        return tuple(self.base.vertices[k] for k in self.walks[i])

    def index_of(self, walk: Sequence[str]) -> int:
        if self._lookup is None:
            self._lookup = {self.walk(i): i for i in range(self.vertex_count)}
        key = tuple(walk)
        if key not in self._lookup:
            raise ValidationError(f"{walk_name(key)} is not a walk of length {self.n}", field='walk')
        return self._lookup[key]

    def neighbors(self, i: int) -> List[int]:
        row = self.adjacency.indices[self.adjacency.indptr[i]:self.adjacency.indptr[i + 1]]
        return sorted(int(j) for j in row)

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i, j])

    def to_graph(self) -> Graph:
        """Materialize as a Graph whose vertices are dotted walk names."""
        names = [walk_name(self.walk(i)) for i in range(self.vertex_count)]
        coo = self.adjacency.tocoo()
        edges = frozenset((names[a], names[b]) for a, b in zip(coo.row.tolist(), coo.col.tolist()))
        return Graph(tuple(names), edges, {'strip': {'n': self.n}})


def _base_arrays(g: Graph):
    """CSR neighbour lists and the slot transition table of adjacent base pairs."""
    size = len(g.vertices)
    neighbors = [[g.index(w) for w in g.neighbors(v)] for v in g.vertices]
    degree = np.array([len(ns) for ns in neighbors], dtype=np.int64)
    indptr = np.zeros(size + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(degree)
    indices = np.array([w for ns in neighbors for w in ns], dtype=np.int64)

    edge_id = np.full((size, size), -1, dtype=np.int64)
    directed = [(g.index(u), g.index(v)) for u, v in g.directed_edges()]
    counts, first, slot_a, slot_b = [], [], [], []
    for k, (u, v) in enumerate(directed):
        edge_id[u, v] = k
        first.append(len(slot_a))
        for s, x in enumerate(neighbors[u]):
            for t, y in enumerate(neighbors[v]):
                if g.has_edge(g.vertices[x], g.vertices[y]):
                    slot_a.append(s)
                    slot_b.append(t)
        counts.append(len(slot_a) - first[-1])
    table = (np.array(counts, dtype=np.int64), np.array(first, dtype=np.int64),
             np.array(slot_a, dtype=np.int64), np.array(slot_b, dtype=np.int64))
    src = np.array([u for u, _ in directed], dtype=np.int64)
    dst = np.array([v for _, v in directed], dtype=np.int64)
    return degree, indptr, indices, edge_id, table, src, dst


def _expand(counts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Owner index and offset within its run, for runs of the given lengths."""
    owner = np.repeat(np.arange(counts.size, dtype=np.int64), counts)
    offset = np.arange(owner.size, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    return owner, offset


def strip_graph(g: Graph, n: int, walk_cap: int = 500_000, pair_cap: int = 50_000_000) -> StripGraph:
    """
    Build G_n, the graph of walks of length ``n`` with pointwise adjacency.

    Args:
        g: Base graph
        n: Walk length, at least 0 (G_0 is g itself)
        walk_cap: Largest vertex count allowed
        pair_cap: Largest number of adjacent ordered pairs allowed

    Raises:
        BudgetExceededError: With the walk or pair count that would be needed
    """
    if n < 0:
        raise ValidationError("strip length must be non-negative", field='n', value=n)
    needed = walk_count(g, n)
    if needed > walk_cap:
        raise BudgetExceededError(f"G_{n} has {needed} walks, over the cap of {walk_cap}",
                                  budget=walk_cap, used=needed, details={'n': n})

    degree, indptr, indices, edge_id, table, src, dst = _base_arrays(g)
    t_count, t_first, slot_a, slot_b = table
    end = np.arange(len(g.vertices), dtype=np.int64)
    walks = end.reshape(-1, 1)
    for level in range(1, n + 1):
        steps = degree[end]
        start = np.cumsum(steps) - steps
        parent, slot = _expand(steps)
        new_end = indices[indptr[end[parent]] + slot]

        kind = edge_id[end[src], end[dst]]
        fan = t_count[kind]
        total = int(fan.sum())
        if total > pair_cap:
            raise BudgetExceededError(f"G_{level} has {total} adjacent pairs, over the cap of {pair_cap}",
                                      budget=pair_cap, used=total, details={'n': n, 'level': level})
        pair, offset = _expand(fan)
        flat = t_first[kind[pair]] + offset
        src, dst = start[src[pair]] + slot_a[flat], start[dst[pair]] + slot_b[flat]

        walks = np.column_stack([walks[parent], new_end])
        end = new_end
        logger.debug(f"Strip level {level}: {end.size} walks, {src.size} adjacent pairs")

    size = int(end.size)
    adjacency = sparse.csr_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(size, size))
    return StripGraph(g, n, walks, adjacency)


# ---------------------------------------------------------------------- diameter

@dataclass(frozen=True)
class DiameterResult:
    """Diameter value; the maximum over components when disconnected."""

    value: int
    exact: bool
    connected: bool
    components: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {'value': self.value, 'exact': self.exact, 'connected': self.connected,
                'components': self.components}


def adjacency_matrix(g: Graph) -> sparse.csr_matrix:
    """Symmetric 0/1 adjacency matrix of ``g`` in vertex order."""
    size = len(g.vertices)
    pairs = [(g.index(u), g.index(v)) for u, v in g.edges]
    rows = np.array([a for a, _ in pairs], dtype=np.int64)
    cols = np.array([b for _, b in pairs], dtype=np.int64)
    return sparse.csr_matrix((np.ones(len(pairs), dtype=np.int8), (rows, cols)), shape=(size, size))


def _distances(adj: sparse.csr_matrix, sources: Sequence[int]) -> np.ndarray:
    return csgraph.shortest_path(adj, method='D', directed=False, unweighted=True,
                                 indices=np.asarray(sources, dtype=np.int64))


def _eccentricities(adj: sparse.csr_matrix, sources: np.ndarray) -> np.ndarray:
    out = []
    for lo in range(0, sources.size, SOURCE_BATCH):
        out.append(_distances(adj, sources[lo:lo + SOURCE_BATCH]).max(axis=1))
    return np.concatenate(out) if out else np.zeros(0)


def _hub(adj: sparse.csr_matrix) -> int:
    return int(np.argmax(np.diff(adj.indptr)))


def _ifub(adj: sparse.csr_matrix) -> int:
    """Exact diameter of a connected graph by iFUB from its highest-degree vertex."""
    levels = _distances(adj, [_hub(adj)])[0].astype(np.int64)
    i = int(levels.max())
    lower, upper = i, 2 * i
    while upper > lower:
        fringe = np.flatnonzero(levels == i)
        lower = max(lower, int(_eccentricities(adj, fringe).max()))
        if lower > 2 * (i - 1):
            break
        upper = 2 * (i - 1)
        i -= 1
    return lower


def _double_sweep(adj: sparse.csr_matrix, sweeps: int = 4) -> int:
    """Lower bound on the diameter of a connected graph from repeated sweeps."""
    current, best = _hub(adj), 0
    for _ in range(sweeps):
        dist = _distances(adj, [current])[0]
        best = max(best, int(dist.max()))
        far = int(np.argmax(dist))
        if far == current:
            break
        current = far
    return best


def diameter(g: Union[Graph, StripGraph, sparse.spmatrix], mode: str = 'exact',
             exact_cap: int = 50_000) -> DiameterResult:
    """
    Diameter of a graph, per connected component.

    Args:
        g: A Graph, a StripGraph or a symmetric sparse adjacency matrix
        mode: 'exact' or 'heuristic'
        exact_cap: Largest vertex count for exact mode; larger inputs fall
            back to the heuristic and are flagged inexact

    Returns:
        DiameterResult with the maximum component diameter
    """
    if mode not in ('exact', 'heuristic'):
        raise ValidationError(f"unknown diameter mode {mode!r}", field='mode', value=mode)
    if isinstance(g, Graph):
        adj = adjacency_matrix(g)
    elif isinstance(g, StripGraph):
        adj = g.adjacency
    else:
        adj = sparse.csr_matrix(g)
    size = adj.shape[0]
    if size == 0:
        return DiameterResult(0, True, True, 0)

    exact = mode == 'exact'
    if exact and size > exact_cap:
        logger.warning(f"{size} vertices exceed the exact diameter cap of {exact_cap}; using double sweeps")
        exact = False

    count, labels = csgraph.connected_components(adj, directed=False)
    value = 0
    for component in range(count):
        members = np.flatnonzero(labels == component)
        if members.size == 1:
            continue
        sub = adj[members][:, members] if count > 1 else adj
        value = max(value, _ifub(sub) if exact else _double_sweep(sub))
    return DiameterResult(value, exact, count == 1, int(count))
