"""
Square equivalence of non-backtracking walks.

Two walks with the same endpoints are square equivalent when one can be
turned into the other by a chain of moves, each inserting a conjugated
square ``y s y^-1`` at some position and reducing. This is the word
problem of the square group, so the decision is layered:

1. identical walks are equivalent with an empty chain;
2. without squares, distinct reduced walks are never equivalent;
3. a closed coset table decides the question exactly;
4. an image of infinite order in the abelianization certifies inequivalence;
5. otherwise a bounded bidirectional breadth-first search looks for a chain.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from core.exceptions import WalkError
from graphs import Graph, NonBacktrackingWalk, Walk, enumerate_squares, insert_cycle, iter_oriented_squares, reduce
from graphs.walks import invert_sequence, reduce_sequence
from groups import SquareGroupAnalysis, analyze_square_group, free_reduce

logger = logging.getLogger(__name__)

Vertices = Tuple[str, ...]


@dataclass(frozen=True)
class SquareMove:
    """Insert ``cycle`` (a conjugated square) after position ``k`` and reduce."""

    k: int
    cycle: Vertices

    def apply(self, g: Graph, p: Walk) -> NonBacktrackingWalk:
        return reduce(insert_cycle(p, self.k, Walk(g, self.cycle)))

    def to_dict(self) -> dict:
        return {'k': self.k, 'cycle': list(self.cycle)}


@dataclass(frozen=True)
class Equivalent:
    """
    The walks are square equivalent.

    ``chain`` replays p into q; it is None only when a closed coset table
    proved equivalence but the search found no explicit chain in budget.
    """

    chain: Optional[Tuple[SquareMove, ...]]
    method: str

    def replay(self, g: Graph, p: Walk) -> NonBacktrackingWalk:
        current = reduce(p)
        for move in self.chain or ():
            current = move.apply(g, current)
        return current

    def to_dict(self) -> dict:
        chain = None if self.chain is None else [m.to_dict() for m in self.chain]
        return {'status': 'equivalent', 'method': self.method, 'chain': chain}


@dataclass(frozen=True)
class Inequivalent:
    method: str

    def to_dict(self) -> dict:
        return {'status': 'inequivalent', 'method': self.method}


@dataclass(frozen=True)
class Undecided:
    """Rewriting budget exhausted with no table to fall back on."""

    states: int
    depth: int

    def to_dict(self) -> dict:
        return {'status': 'unknown', 'states': self.states, 'depth': self.depth}


EquivalenceOutcome = Union[Equivalent, Inequivalent, Undecided]

# internal move: (k, y, s) with y a short walk from p_k and s a square at y's end
_Move = Tuple[int, Vertices, Vertices]


def _cycle(y: Vertices, s: Vertices) -> Vertices:
    return y + s[1:] + invert_sequence(y)[1:]


def _tails(g: Graph, start: str, length: int) -> Iterator[Vertices]:
    """Non-backtracking walks from ``start`` of length 0..length."""
    stack: List[Vertices] = [(start,)]
    while stack:
        y = stack.pop()
        yield y
        if len(y) - 1 < length:
            for x in g.neighbors(y[-1]):
                if len(y) >= 2 and x == y[-2]:
                    continue
                stack.append(y + (x,))


class _Rewriter:
    """Bidirectional BFS over reduced walks connected by square moves."""

    def __init__(self, g: Graph, depth: int, max_states: int, conjugate_tail: int, max_len: int):
        self.g = g
        self.depth = depth
        self.max_states = max_states
        self.conjugate_tail = conjugate_tail
        self.max_len = max_len
        self._squares_at = {v: list(iter_oriented_squares(g, v)) for v in g.vertices}
        self._tails_at: Dict[str, List[Vertices]] = {}

    def _moves(self, w: Vertices) -> Iterator[Tuple[_Move, Vertices]]:
        for k in range(len(w)):
            tails = self._tails_at.get(w[k])
            if tails is None:
                tails = list(_tails(self.g, w[k], self.conjugate_tail))
                self._tails_at[w[k]] = tails
            for y in tails:
                for s in self._squares_at[y[-1]]:
                    nxt = reduce_sequence(w[:k] + _cycle(y, s) + w[k + 1:])
                    if len(nxt) <= self.max_len:
                        yield (k, y, s), nxt

    def search(self, p: Vertices, q: Vertices) -> Tuple[Optional[List[SquareMove]], int]:
        fwd: Dict[Vertices, Optional[Tuple[Vertices, _Move]]] = {p: None}
        bwd: Dict[Vertices, Optional[Tuple[Vertices, _Move]]] = {q: None}
        fwd_layer, bwd_layer = [p], [q]
        fwd_depth = bwd_depth = 0
        while fwd_layer and bwd_layer and fwd_depth + bwd_depth < self.depth:
            forward = len(fwd_layer) <= len(bwd_layer)
            seen, other = (fwd, bwd) if forward else (bwd, fwd)
            layer = fwd_layer if forward else bwd_layer
            nxt_layer = []
            for w in layer:
                for move, nxt in self._moves(w):
                    if nxt in seen:
                        continue
                    seen[nxt] = (w, move)
                    if nxt in other:
                        return self._chain(fwd, bwd, nxt), len(fwd) + len(bwd)
                    if len(fwd) + len(bwd) >= self.max_states:
                        return None, len(fwd) + len(bwd)
                    nxt_layer.append(nxt)
            if forward:
                fwd_layer, fwd_depth = nxt_layer, fwd_depth + 1
            else:
                bwd_layer, bwd_depth = nxt_layer, bwd_depth + 1
        return None, len(fwd) + len(bwd)

    def _chain(self, fwd, bwd, meet: Vertices) -> List[SquareMove]:
        head: List[SquareMove] = []
        w = meet
        while fwd[w] is not None:
            prev, (k, y, s) = fwd[w]
            head.append(SquareMove(k, _cycle(y, s)))
            w = prev
        head.reverse()
        tail: List[SquareMove] = []
        w = meet
        while bwd[w] is not None:
            prev, (k, y, s) = bwd[w]
            # w was produced from prev; undo by inserting the inverse conjugate at 0
            x = reduce_sequence(prev[:k + 1] + y[1:])
            tail.append(SquareMove(0, _cycle(x, invert_sequence(s))))
            w = prev
        return head + tail


def _require_same_endpoints(p: Walk, q: Walk) -> None:
    if p.start != q.start or p.end != q.end:
        raise WalkError("walks do not share endpoints",
                        details={'p': (p.start, p.end), 'q': (q.start, q.end)})


def square_equivalent(g: Graph, p: Walk, q: Walk, depth: int = 64, *,
                      analysis: Optional[SquareGroupAnalysis] = None,
                      max_states: int = 20_000, conjugate_tail: int = 2,
                      max_cosets: int = 1_000_000) -> EquivalenceOutcome:
    """
    Decide whether ``p`` and ``q`` are square equivalent.

    Args:
        g: The graph
        p, q: Walks with the same endpoints (reduced first)
        depth: Maximum chain length explored by the rewriting search
        analysis: Precomputed square-group analysis of g
        max_states: Rewriting search state budget
        conjugate_tail: Maximum length of the conjugating walk y
        max_cosets: Enumeration budget when analysis must be computed

    Returns:
        Equivalent (with replayable chain), Inequivalent, or Undecided

    Raises:
        WalkError: If the endpoints differ
    """
    _require_same_endpoints(p, q)
    pv, qv = reduce(p).vertices, reduce(q).vertices
    if pv == qv:
        return Equivalent((), 'identical')
    if not enumerate_squares(g):
        return Inequivalent('no squares')

    analysis = analysis or analyze_square_group(g, max_cosets=max_cosets)
    image = analysis.walk_image(pv + invert_sequence(qv)[1:])
    rewriter = _Rewriter(g, depth, max_states, conjugate_tail,
                         max(len(pv), len(qv)) + 4 + 2 * conjugate_tail)

    proved: Optional[str] = None
    if analysis.is_finite:
        table = analysis.outcome.table
        if table.act(0, image) != 0:
            return Inequivalent('coset table')
        proved = 'coset table'
    elif not free_reduce(image):
        proved = 'free reduction'
    elif analysis.walk_has_infinite_order(pv + invert_sequence(qv)[1:]):
        return Inequivalent('abelianization')

    chain, states = rewriter.search(pv, qv)
    if chain is not None:
        logger.debug(f"Square chain of {len(chain)} move(s) found over {states} states")
        return Equivalent(tuple(chain), 'rewriting')
    if proved:
        return Equivalent(None, proved)
    logger.warning(f"Square rewriting budget exhausted after {states} states")
    return Undecided(states, depth)
