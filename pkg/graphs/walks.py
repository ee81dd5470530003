"""
Walk algebra on a Graph.

Walks are validated vertex sequences. ``reduce`` removes backtracks
(a b a -> a) until none remain, ``star`` concatenates and reduces, and
``insert_cycle`` splices a closed walk in at a position; together these
are the moves of square-equivalence rewriting.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from core.exceptions import WalkError

from .graph import Graph, SpanningTree


@dataclass(frozen=True, eq=False)
class Walk:
    """A walk p0 ... pl on ``graph``. Equality and hashing use the vertices only."""

    graph: Graph = field(repr=False)
    vertices: Tuple[str, ...]

    def __eq__(self, other):
        if isinstance(other, Walk):
            return self.vertices == other.vertices
        return NotImplemented

    def __hash__(self):
        return hash(self.vertices)

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, 'vertices', vs)
        if not vs:
            raise WalkError("a walk has at least one vertex")
        g = self.graph
        if not g.has_vertex(vs[0]):
            raise WalkError(f"unknown vertex {vs[0]!r}", field='vertices', value=vs[0])
        for i in range(len(vs) - 1):
            if not g.has_edge(vs[i], vs[i + 1]):
                raise WalkError(f"({vs[i]}, {vs[i + 1]}) is not an edge", field='vertices', value=i)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    @property
    def is_cycle(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def is_non_backtracking(self) -> bool:
        return is_non_backtracking(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def to_list(self) -> List[str]:
        return list(self.vertices)


class NonBacktrackingWalk(Walk):
    """A walk with p_{i+2} != p_i for every valid i."""

    def __post_init__(self):
        super().__post_init__()
        if not is_non_backtracking(self.vertices):
            raise WalkError("walk contains a backtrack", field='vertices', value=self.vertices)


def is_non_backtracking(vertices: Sequence[str]) -> bool:
    return all(vertices[i] != vertices[i + 2] for i in range(len(vertices) - 2))


def reduce_sequence(vertices: Iterable[str]) -> Tuple[str, ...]:
    """
    Remove backtracks by a single left-to-right pass.

    Each step cancels the leftmost backtrack created so far, which is the
    same as repeated leftmost-backtrack removal.
    """
    stack: List[str] = []
    for v in vertices:
        if len(stack) >= 2 and stack[-2] == v:
            stack.pop()
        else:
            stack.append(v)
    return tuple(stack)


def reduce(p: Walk) -> NonBacktrackingWalk:
    """The backtrack-free reduction of ``p``."""
    return NonBacktrackingWalk(p.graph, reduce_sequence(p.vertices))


def star(p: Walk, q: Walk) -> NonBacktrackingWalk:
    """
    Concatenate and reduce.

    Raises:
        WalkError: If p does not end where q starts
    """
    if p.end != q.start:
        raise WalkError("walks are not composable", details={'end': p.end, 'start': q.start})
    return NonBacktrackingWalk(p.graph, reduce_sequence(p.vertices + q.vertices[1:]))


def inverse(p: Walk) -> Walk:
    """The reverse walk; non-backtracking walks stay non-backtracking."""
    return type(p)(p.graph, tuple(reversed(p.vertices)))


def tree_path(t: SpanningTree, a: str, b: str) -> NonBacktrackingWalk:
    """
    The unique non-backtracking walk from ``a`` to ``b`` inside the tree.

    Raises:
        WalkError: If either vertex is outside the tree
    """
    g = t.graph
    for v in (a, b):
        if not g.has_vertex(v):
            raise WalkError(f"vertex {v!r} is not in the tree", value=v)
    up_a = t.path_to_root(a)
    up_b = t.path_to_root(b)
    on_b = {v: i for i, v in enumerate(up_b)}
    for i, v in enumerate(up_a):
        if v in on_b:
            return NonBacktrackingWalk(g, tuple(up_a[:i + 1]) + tuple(reversed(up_b[:on_b[v]])))
    raise WalkError("tree paths do not meet", details={'a': a, 'b': b})  # pragma: no cover


def insert_cycle(p: Walk, k: int, c: Walk) -> Walk:
    """
    p0 ... pk, then c, then pk ... pl.

    Raises:
        WalkError: If k is out of range or c is not a cycle at p_k
    """
    if not 0 <= k <= p.length:
        raise WalkError("insertion index out of range", field='k', value=k)
    if c.start != p.vertices[k] or c.end != p.vertices[k]:
        raise WalkError("cycle is not attached at p_k", details={'p_k': p.vertices[k], 'cycle_start': c.start})
    vs = p.vertices
    return Walk(p.graph, vs[:k] + c.vertices + vs[k + 1:])


def invert_sequence(vertices: Sequence[str]) -> Tuple[str, ...]:
    return tuple(reversed(vertices))
