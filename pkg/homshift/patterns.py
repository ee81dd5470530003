"""
Finite two-dimensional patterns of a homshift.

A pattern labels every cell (x, y) of a width x height box with a vertex
of a graph. It is locally admissible when horizontally and vertically
adjacent cells carry adjacent vertices, i.e. it is the restriction of a
graph homomorphism from the square lattice.
"""

import json
import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from core.exceptions import LiftError, PatternError
from covers import Cover, lift_step
from graphs import Graph, Square

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Pattern:
    """Vertex labels of a box; ``rows[y][x]`` is the label of cell (x, y)."""

    width: int
    height: int
    rows: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise PatternError("pattern dimensions must be positive", field='size',
                               value=(self.width, self.height))
        if len(self.rows) != self.height or any(len(r) != self.width for r in self.rows):
            raise PatternError(f"pattern rows do not form a {self.width}x{self.height} box", field='cells')

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str]]) -> 'Pattern':
        rows = tuple(tuple(r) for r in rows)
        return cls(len(rows[0]) if rows else 0, len(rows), rows)

    @classmethod
    def from_dict(cls, data: Any) -> 'Pattern':
        """
        Read a pattern object with "width", "height" and row-major "cells".

        Raises:
            PatternError: On missing keys or a cell count that does not fit
        """
        if not isinstance(data, dict) or not {'width', 'height', 'cells'} <= set(data):
            raise PatternError("pattern needs 'width', 'height' and 'cells'", field='pattern')
        w, h, cells = data['width'], data['height'], data['cells']
        if not isinstance(w, int) or not isinstance(h, int) or not isinstance(cells, list):
            raise PatternError("pattern width and height must be integers and cells a list", field='pattern')
        if cells and isinstance(cells[0], list):
            cells = [c for row in cells for c in row]
        if len(cells) != w * h:
            raise PatternError(f"expected {w * h} cells, got {len(cells)}", field='cells', value=len(cells))
        cells = [str(c) for c in cells]
        return cls(w, h, tuple(tuple(cells[y * w:(y + 1) * w]) for y in range(h)))

    def to_dict(self) -> Dict[str, Any]:
        return {'width': self.width, 'height': self.height, 'cells': [c for row in self.rows for c in row]}

    def at(self, x: int, y: int) -> str:
        return self.rows[y][x]

    def cells(self) -> List[Cell]:
        """All cells in row-major order."""
        return [(x, y) for y in range(self.height) for x in range(self.width)]

    def check_vertices(self, g: Graph) -> None:
        """
        Raises:
            PatternError: If some cell is not labelled by a vertex of g
        """
        for x, y in self.cells():
            if not g.has_vertex(self.at(x, y)):
                raise PatternError(f"cell ({x}, {y}) holds unknown vertex {self.at(x, y)!r}",
                                   field='cells', value=(x, y))


def parse_pattern(text: str) -> Pattern:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PatternError(f"pattern file syntax error: {e.msg}", field='pattern',
                           details={'line': e.lineno, 'column': e.colno}) from e
    return Pattern.from_dict(data)


@dataclass(frozen=True)
class Admissibility:
    """Result of the local admissibility test with its first violating pair."""

    ok: bool
    violation: Optional[Tuple[Cell, Cell]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_locally_admissible(g: Graph, p: Pattern) -> Admissibility:
    """
    Whether every pair of adjacent cells carries an edge of ``g``.

    Cells are scanned row-major; at each cell the right neighbour is
    checked before the upper one.
    """
    p.check_vertices(g)
    for x, y in p.cells():
        if x + 1 < p.width and not g.has_edge(p.at(x, y), p.at(x + 1, y)):
            return Admissibility(False, ((x, y), (x + 1, y)))
        if y + 1 < p.height and not g.has_edge(p.at(x, y), p.at(x, y + 1)):
            return Admissibility(False, ((x, y), (x, y + 1)))
    return Admissibility(True)


def counterexample_pattern(s: Square) -> Pattern:
    """The 3x3 pattern around a square that cannot be lifted when the square does not lift."""
    s0, s1, s2, s3 = s.vertices[:4]
    return Pattern.from_rows([(s0, s1, s0), (s3, s2, s3), (s0, s1, s0)])


@dataclass(frozen=True)
class Obstruction:
    """A plaquette whose two lifts disagree at its upper-right cell."""

    cell: Cell
    via_row: str
    via_column: str

    def to_dict(self) -> Dict[str, Any]:
        return {'cell': list(self.cell), 'via_row': self.via_row, 'via_column': self.via_column}


LiftOutcome = Union[Pattern, Obstruction]


def lift_pattern(c: Cover, p: Pattern, corner_lift: str) -> LiftOutcome:
    """
    Lift a pattern through a cover.

    Row 0 is lifted from the corner, then every column upwards from its
    row-0 value. Each unit plaquette is then checked: stepping right from
    its upper-left lift must reach its upper-right lift.

    Args:
        c: A cover of the pattern's graph
        p: A locally admissible pattern
        corner_lift: Total vertex over p at (0, 0)

    Returns:
        The lifted pattern over c.total, or the first disagreeing plaquette

    Raises:
        PatternError: If p is not locally admissible
        LiftError: If corner_lift is not over p at (0, 0)
        TruncationBoundaryError: If a truncated cover is too small
    """
    check = is_locally_admissible(c.base, p)
    if not check:
        raise PatternError("pattern is not locally admissible", field='cells', value=check.violation)
    if not c.total.has_vertex(corner_lift) or c.projection[corner_lift] != p.at(0, 0):
        raise LiftError("corner lift is not over cell (0, 0)", field='corner_lift', value=corner_lift)

    lifted: Dict[Cell, str] = {(0, 0): corner_lift}
    for x in range(1, p.width):
        lifted[(x, 0)] = lift_step(c, lifted[(x - 1, 0)], p.at(x, 0), x)
    for x in range(p.width):
        for y in range(1, p.height):
            lifted[(x, y)] = lift_step(c, lifted[(x, y - 1)], p.at(x, y), y)

    for y in range(p.height - 1):
        for x in range(p.width - 1):
            via_row = lift_step(c, lifted[(x, y + 1)], p.at(x + 1, y + 1))
            if via_row != lifted[(x + 1, y + 1)]:
                logger.debug(f"Plaquette at ({x}, {y}) does not close")
                return Obstruction((x + 1, y + 1), via_row, lifted[(x + 1, y + 1)])
    return Pattern.from_rows([[lifted[(x, y)] for x in range(p.width)] for y in range(p.height)])


def random_admissible_pattern(g: Graph, width: int, height: int, rng: random.Random) -> Pattern:
    """
    Sample a locally admissible pattern, cell by cell in row-major order.

    Candidates for a cell are the common neighbours of its left and lower
    cells, tried in random order with backtracking.

    Raises:
        PatternError: If the box admits no admissible pattern
    """
    if width < 1 or height < 1:
        raise PatternError("pattern dimensions must be positive", field='size', value=(width, height))
    cells = [(x, y) for y in range(height) for x in range(width)]
    labels: Dict[Cell, str] = {}

    def candidates(x: int, y: int) -> List[str]:
        pool = set(g.vertices)
        if x > 0:
            pool &= set(g.neighbors(labels[(x - 1, y)]))
        if y > 0:
            pool &= set(g.neighbors(labels[(x, y - 1)]))
        options = [v for v in g.vertices if v in pool]
        rng.shuffle(options)
        return options

    stack = [candidates(*cells[0])]
    while stack:
        i = len(stack) - 1
        if not stack[-1]:
            stack.pop()
            labels.pop(cells[i], None)
            continue
        labels[cells[i]] = stack[-1].pop()
        if i + 1 == len(cells):
            return Pattern.from_rows([[labels[(x, y)] for x in range(width)] for y in range(height)])
        stack.append(candidates(*cells[i + 1]))
    raise PatternError(f"no admissible {width}x{height} pattern exists", field='size', value=(width, height))
