"""
Graph covers.

A Cover is a total graph with a projection onto a base graph. Exact covers
satisfy the local-isomorphism condition everywhere; truncated balls carry
a basepoint, a radius and per-vertex depths, and are only trusted strictly
inside the radius.

Cover file format: the graph-file object of the total graph plus
``"projection"`` (total vertex -> base vertex), ``"provenance"`` and, for
truncated balls, ``"radius"``, ``"basepoint"`` and ``"depth"``.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from core.exceptions import CoverError, GraphFormatError, LiftError, TruncationBoundaryError
from graphs import Graph, Walk, graph_from_dict

logger = logging.getLogger(__name__)

EXACT = 'exact'
TRUNCATED = 'truncated-ball'


@dataclass(frozen=True)
class Cover:
    """A graph homomorphism ``projection`` from ``total`` onto ``base``."""

    total: Graph
    base: Graph = field(repr=False)
    projection: Mapping[str, str] = field(repr=False)
    provenance: str = EXACT
    radius: Optional[int] = None
    basepoint: Optional[str] = None
    depth: Mapping[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.provenance not in (EXACT, TRUNCATED):
            raise CoverError(f"unknown provenance {self.provenance!r}", field='provenance', value=self.provenance)
        if self.provenance == TRUNCATED and (self.radius is None or self.basepoint is None):
            raise CoverError("truncated covers need a radius and a basepoint", field='radius')
        for v in self.total.vertices:
            if v not in self.projection:
                raise CoverError(f"projection undefined on {v!r}", field='projection', value=v)
            if not self.base.has_vertex(self.projection[v]):
                raise CoverError(f"{v!r} projects outside the base", field='projection', value=self.projection[v])
        for u, v in self.total.edges:
            if not self.base.has_edge(self.projection[u], self.projection[v]):
                raise CoverError("projection is not a graph homomorphism", field='edges', value=(u, v))
        fibers: Dict[str, List[str]] = {b: [] for b in self.base.vertices}
        for v in self.total.vertices:
            fibers[self.projection[v]].append(v)
        object.__setattr__(self, '_fibers', {b: tuple(vs) for b, vs in fibers.items()})

    @property
    def is_truncated(self) -> bool:
        return self.provenance == TRUNCATED

    def fiber(self, b: str) -> Tuple[str, ...]:
        """Total vertices over the base vertex ``b``, in total-vertex order."""
        return self._fibers[b]

    def is_interior(self, v: str) -> bool:
        """Whether the local-isomorphism condition is certified at ``v``."""
        if not self.is_truncated:
            return True
        return self.depth[v] < self.radius

    def to_dict(self) -> Dict[str, Any]:
        data = self.total.to_dict()
        data['projection'] = {v: self.projection[v] for v in self.total.vertices}
        data['provenance'] = self.provenance
        if self.is_truncated:
            data['radius'] = self.radius
            data['basepoint'] = self.basepoint
            data['depth'] = {v: self.depth[v] for v in self.total.vertices}
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self, name: str = 'cover') -> str:
        """DOT source with vertices coloured by fiber."""
        return self.total.to_dot(name, fibers=self.projection, base_order=self.base.vertices)


def identity_cover(g: Graph) -> Cover:
    """G covering itself."""
    return Cover(g, g, {v: v for v in g.vertices})


def cover_from_dict(data: Any, base: Graph) -> Cover:
    """
    Build a Cover over ``base`` from a decoded cover file.

    Raises:
        GraphFormatError: If required keys are missing
        CoverError: If the cover is inconsistent with the base
    """
    if not isinstance(data, dict) or 'projection' not in data:
        raise GraphFormatError("cover file must carry a 'projection' object")
    total = graph_from_dict({'vertices': data.get('vertices'), 'edges': data.get('edges')})
    projection = data['projection']
    if not isinstance(projection, dict):
        raise GraphFormatError("'projection' must be an object")
    return Cover(total, base, dict(projection), data.get('provenance', EXACT),
                 data.get('radius'), data.get('basepoint'), dict(data.get('depth') or {}))


def parse_cover(text: str, base: Graph) -> Cover:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"cover file syntax error: {e.msg}", position=f"line {e.lineno} column {e.colno}") from e
    return cover_from_dict(data, base)


@dataclass(frozen=True)
class CoveringCheck:
    """Outcome of ``check_covering_map``; falsy with a ``witness`` on failure."""

    ok: bool
    witness: Optional[Dict[str, Any]] = None

    def __bool__(self) -> bool:
        return self.ok


def check_covering_map(c: Cover) -> CoveringCheck:
    """
    Verify the local-isomorphism condition.

    Every (interior) total vertex must have its neighbourhood mapped
    bijectively onto the neighbourhood of its image, and the
    neighbourhoods of distinct vertices in one fiber must be disjoint.

    Returns:
        CoveringCheck, with a witness dict naming the failing vertex
    """
    for v in c.total.vertices:
        if not c.is_interior(v):
            continue
        images = [c.projection[w] for w in c.total.neighbors(v)]
        expected = set(c.base.neighbors(c.projection[v]))
        if len(set(images)) != len(images):
            return CoveringCheck(False, {'vertex': v, 'reason': 'not locally injective', 'images': images})
        if set(images) != expected:
            missing = sorted(expected - set(images), key=c.base.index)
            return CoveringCheck(False, {'vertex': v, 'reason': 'not locally surjective', 'missing': missing})

    for x in c.total.vertices:
        owners: Dict[str, str] = {}
        for a in c.total.neighbors(x):
            if not c.is_interior(a):
                continue
            b = c.projection[a]
            if b in owners and owners[b] != a:
                return CoveringCheck(False, {'vertex': x, 'reason': 'fiber neighbourhoods overlap',
                                             'fiber': [owners[b], a]})
            owners[b] = a
    return CoveringCheck(True)


def lift_walk(c: Cover, p: Walk, start: str) -> Walk:
    """
    The unique lift of ``p`` starting at ``start``.

    Args:
        c: A cover
        p: Walk on the base
        start: Total vertex over p's first vertex

    Returns:
        Walk on the total graph projecting to p pointwise

    Raises:
        LiftError: If start is not over p_0 or a step has no lift
        TruncationBoundaryError: If the lift would leave the verified radius
    """
    if not c.total.has_vertex(start) or c.projection[start] != p.start:
        raise LiftError("start vertex is not over the first vertex of the walk",
                        field='start', value=start, details={'p0': p.start})
    lifted = [start]
    current = start
    for i, target in enumerate(p.vertices[1:], start=1):
        current = lift_step(c, current, target, i)
        lifted.append(current)
    return Walk(c.total, tuple(lifted))


def lift_step(c: Cover, current: str, target: str, step: int = 1) -> str:
    """
    The unique neighbour of ``current`` lying over ``target``.

    Raises:
        LiftError: If there is no such neighbour or more than one
        TruncationBoundaryError: If current lies on the truncation boundary
    """
    if not c.is_interior(current):
        raise TruncationBoundaryError(
            "lift leaves the verified radius of the truncated cover",
            budget=c.radius, used=c.depth.get(current), details={'step': step, 'vertex': current})
    candidates = [w for w in c.total.neighbors(current) if c.projection[w] == target]
    if len(candidates) != 1:
        raise LiftError(f"no unique lift of step {step}", field='step', value=step,
                        details={'vertex': current, 'candidates': len(candidates)})
    return candidates[0]
