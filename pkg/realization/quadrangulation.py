"""
Flat quadrangulations.

A flat quadrangulation is stored with its embedding witness: the closed
walk around the external face and the list of internal faces, each a
square. The wheel construction quadrangulates any even cycle of length at
least six, and boundary peeling removes one internal face at a time.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import RealizationError, ValidationError
from graphs import Graph, Square, enumerate_squares, is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FlatQuadrangulation:
    """
    A planar graph given with its faces.

    ``border`` is the closed walk around the external face (first vertex
    repeated at the end); ``faces`` are the canonical squares bounding the
    internal faces.
    """

    graph: Graph
    border: Tuple[str, ...]
    faces: Tuple[Square, ...]

    def validate(self) -> List[str]:
        """Invariant violations, empty when the witness is consistent."""
        errors = []
        g = self.graph
        if not is_connected(g):
            errors.append("graph is not connected")
        if len(self.border) < 1 or self.border[0] != self.border[-1]:
            errors.append("border is not closed")
        for i in range(len(self.border) - 1):
            if not g.has_edge(self.border[i], self.border[i + 1]):
                errors.append(f"border step {i} is not an edge")
        canonical = {s.vertices for s in enumerate_squares(g)}
        listed = set()
        for f in self.faces:
            if f.canonical(g).vertices not in canonical:
                errors.append(f"face {f.vertices} is not a square of the graph")
            listed.add(f.canonical(g).vertices)
        for s in canonical - listed:
            errors.append(f"square {s} is not a listed face")
        covered = set(self.border_edges())
        for f in self.faces:
            covered.update(_key(u, v) for u, v in f.edges())
        for u, v in g.undirected_edges():
            if _key(u, v) not in covered:
                errors.append(f"edge ({u}, {v}) lies on no face")
        return errors

    def border_edges(self) -> List[Tuple[str, str]]:
        return [_key(self.border[i], self.border[i + 1]) for i in range(len(self.border) - 1)]

    def border_vertices(self) -> List[str]:
        seen: Dict[str, None] = {}
        for v in self.border[:-1]:
            seen.setdefault(v)
        return list(seen)

    @property
    def has_simple_border(self) -> bool:
        cycle = self.border[:-1]
        return len(cycle) >= 3 and len(set(cycle)) == len(cycle)

    def interior_border_contacts(self) -> List[str]:
        """Vertices off the border that have two or more border neighbours."""
        on_border = set(self.border_vertices())
        return [v for v in self.graph.vertices
                if v not in on_border and sum(1 for w in self.graph.neighbors(v) if w in on_border) >= 2]

    def face_count(self) -> int:
        return len(self.faces)

    def peelable_edges(self) -> List[Tuple[str, str]]:
        """Border edges lying on exactly one internal face, in border order."""
        on_faces: Dict[Tuple[str, str], int] = {}
        for f in self.faces:
            for u, v in f.edges():
                on_faces[_key(u, v)] = on_faces.get(_key(u, v), 0) + 1
        out = []
        for e in self.border_edges():
            if on_faces.get(e, 0) == 1 and e not in out:
                out.append(e)
        return out

    def relabel(self, mapping: Dict[str, str]) -> 'FlatQuadrangulation':
        g = self.graph.relabel(mapping)
        rename = lambda v: mapping.get(v, v)  # noqa: E731
        faces = tuple(Square(tuple(rename(v) for v in f.vertices)).canonical(g) for f in self.faces)
        return FlatQuadrangulation(g, tuple(rename(v) for v in self.border), faces)


def _key(u: str, v: str) -> Tuple[str, str]:
    return (u, v) if u <= v else (v, u)


def quadrangulate_cycle(n: int, border: Optional[Sequence[str]] = None,
                        ring: Optional[Sequence[str]] = None, hub: str = 'hub') -> FlatQuadrangulation:
    """
    The wheel quadrangulation of C_n.

    Border a_k, inner ring i_k with edges a_k-i_k and i_k-i_{k+1}, and a hub
    adjacent to i_k for even k: 2n + 1 vertices, n + n/2 faces.

    Args:
        n: Even cycle length, at least 6
        border: Border vertex names (default a0 .. a{n-1})
        ring: Inner ring names (default i0 .. i{n-1})
        hub: Hub vertex name

    Raises:
        RealizationError: If n is odd or smaller than 6
    """
    if n < 6 or n % 2:
        raise RealizationError("cycle length must be even and at least 6", field='n', value=n)
    a = list(border) if border is not None else [f"a{k}" for k in range(n)]
    i = list(ring) if ring is not None else [f"i{k}" for k in range(n)]
    if len(a) != n or len(i) != n:
        raise ValidationError("border and ring need n names each", field='names')
    edges = []
    for k in range(n):
        nxt = (k + 1) % n
        edges.extend([(a[k], a[nxt]), (a[k], i[k]), (i[k], i[nxt])])
        if k % 2 == 0:
            edges.append((hub, i[k]))
    g = Graph.from_edges(a + i + [hub], edges)
    faces = []
    for k in range(n):
        nxt = (k + 1) % n
        faces.append(Square((a[k], a[nxt], i[nxt], i[k], a[k])).canonical(g))
    for k in range(0, n, 2):
        faces.append(Square((hub, i[k], i[(k + 1) % n], i[(k + 2) % n], hub)).canonical(g))
    return FlatQuadrangulation(g, tuple(a) + (a[0],), tuple(faces))


def peel_boundary_edge(q: FlatQuadrangulation, e: Tuple[str, str]) -> FlatQuadrangulation:
    """
    Remove a border edge that lies on exactly one internal face.

    The face merges into the external face: the border walk detours along
    the face's other three edges.

    Raises:
        RealizationError: If e is not on the border or not on exactly one face
    """
    u, v = e
    key = _key(u, v)
    if key not in q.border_edges():
        raise RealizationError(f"edge ({u}, {v}) is not on the external border", field='edge', value=e)
    faces = [f for f in q.faces if key in {_key(a, b) for a, b in f.edges()}]
    if len(faces) != 1:
        raise RealizationError(f"edge ({u}, {v}) lies on {len(faces)} internal faces", field='edge', value=e)
    face = faces[0]
    b = q.border
    i = next(j for j in range(len(b) - 1) if _key(b[j], b[j + 1]) == key)
    x, y = b[i], b[i + 1]
    # orient the face as x y f2 f3 x; the detour is x f3 f2 y
    oriented = next(vs for vs in face.variants() if vs[0] == x and vs[1] == y)
    border = b[:i + 1] + (oriented[3], oriented[2]) + b[i + 1:]
    remaining = tuple(f for f in q.faces if f is not face)
    peeled = FlatQuadrangulation(q.graph.without_edge(u, v), border, remaining)
    logger.debug(f"Peeled ({u}, {v}); {len(remaining)} internal face(s) remain")
    return peeled
