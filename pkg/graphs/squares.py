"""
Squares: non-backtracking cycles of length four.

A square s0 s1 s2 s3 s4 has s4 = s0, consecutive pairs are edges, s0 != s2
and s1 != s3. Squares are enumerated once per class under rotation and
reversal; the representative is the lexicographically least of the eight
variants, comparing vertex positions.
"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from core.exceptions import ValidationError

from .graph import Graph


@dataclass(frozen=True)
class Square:
    """A square on ``graph``; ``vertices`` has five entries, first equal to last."""

    vertices: Tuple[str, str, str, str, str]

    @classmethod
    def on(cls, g: Graph, vertices: Sequence[str]) -> 'Square':
        """Validate ``vertices`` as a square of ``g``."""
        vs = tuple(vertices)
        if len(vs) == 4:
            vs = vs + (vs[0],)
        if len(vs) != 5 or vs[4] != vs[0]:
            raise ValidationError("a square has five vertices with s4 = s0", field='square', value=vs)
        for i in range(4):
            if not g.has_edge(vs[i], vs[i + 1]):
                raise ValidationError(f"({vs[i]}, {vs[i + 1]}) is not an edge", field='square', value=vs)
        if vs[0] == vs[2] or vs[1] == vs[3]:
            raise ValidationError("square backtracks", field='square', value=vs)
        return cls(vs)  # type: ignore[arg-type]

    def edges(self) -> List[Tuple[str, str]]:
        """The four directed edges (s_i, s_{i+1})."""
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(4)]

    def variants(self) -> Iterator[Tuple[str, ...]]:
        """All eight rotations and reversals, as 5-tuples."""
        yield from square_variants(self.vertices[:4])

    def canonical(self, g: Graph) -> 'Square':
        return Square(canonical_square(g, self.vertices[:4]))  # type: ignore[arg-type]

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> str:
        return self.vertices[i]


def square_variants(cycle: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    """Rotations of a 4-cycle and of its reverse, closed into 5-tuples."""
    forward = list(cycle)
    backward = [forward[0]] + forward[:0:-1]
    for seq in (forward, backward):
        for r in range(4):
            rotated = seq[r:] + seq[:r]
            yield tuple(rotated) + (rotated[0],)


def canonical_square(g: Graph, cycle: Sequence[str]) -> Tuple[str, ...]:
    """Least variant under vertex-position order."""
    return min(square_variants(cycle[:4]), key=lambda vs: tuple(g.index(v) for v in vs))


def iter_oriented_squares(g: Graph, start: str) -> Iterator[Tuple[str, ...]]:
    """Every square (all orientations) based at ``start``."""
    for s1 in g.neighbors(start):
        for s2 in g.neighbors(s1):
            if s2 == start:
                continue
            for s3 in g.neighbors(s2):
                if s3 == s1 or not g.has_edge(s3, start):
                    continue
                yield (start, s1, s2, s3, start)


def enumerate_squares(g: Graph) -> List[Square]:
    """
    One canonical representative per rotation/reversal class of squares.

    Returns:
        Canonical squares sorted by vertex-position order
    """
    found = set()
    for s0 in g.vertices:
        for vs in iter_oriented_squares(g, s0):
            found.add(canonical_square(g, vs[:4]))
    ordered = sorted(found, key=lambda vs: tuple(g.index(v) for v in vs))
    return [Square(vs) for vs in ordered]  # type: ignore[arg-type]
