"""
Coset enumeration over the trivial subgroup.

The enumeration itself is sympy's relator-based Todd-Coxeter
(``coset_enumeration_r``) run on an ``FpGroup`` built from the
presentation, with ``max_cosets`` as its table limit. A closed table is
compressed and standardized so that the numbering is canonical.

Columns follow sympy's layout: column 2i is generator i, column 2i+1 its
inverse.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup

from core.exceptions import ValidationError

from .presentation import Presentation, Word, format_word

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


class CosetTable:
    """Coset table for ``presentation`` acting on the right."""

    def __init__(self, presentation: Presentation, max_cosets: int = 1_000_000):
        if max_cosets <= 0:
            raise ValidationError("max_cosets must be positive", field='max_cosets', value=max_cosets)
        self.presentation = presentation
        self.max_cosets = max_cosets
        self.column: Dict[Tuple[str, int], int] = {}
        for i, g in enumerate(presentation.generators):
            self.column[(g, 1)] = 2 * i
            self.column[(g, -1)] = 2 * i + 1
        self.width = 2 * len(presentation.generators)
        self.rows: List[List[int]] = []
        self.defined = 0
        self.closed = False

    def run(self) -> bool:
        """
        Enumerate until closed or out of budget.

        Returns:
            True when the table closed
        """
        p = self.presentation
        if not p.generators:
            self.rows, self.defined, self.closed = [[]], 1, True
            return True
        group = FpGroup(p.free_group(), p.relator_elements())
        table = coset_enumeration_r(group, [], max_cosets=self.max_cosets, incomplete=True)
        self.defined = len(table.table)
        if not table.is_complete():
            logger.info(f"Coset enumeration stopped at budget {self.max_cosets}")
            return False
        table.compress()
        table.standardize()
        self.rows = [list(row) for row in table.table]
        self.closed = True
        logger.debug(f"Coset table closed with {len(self.rows)} cosets ({self.defined} defined)")
        return True

    # ------------------------------------------------------------------ closed-table queries

    def _require_closed(self) -> None:
        if not self.closed:
            raise ValidationError("coset table is not closed")

    @property
    def order(self) -> int:
        self._require_closed()
        return len(self.rows)

    def act(self, c: int, word: Sequence[Tuple[str, int]]) -> int:
        """Image of coset ``c`` under ``word`` (right action)."""
        self._require_closed()
        for letter in word:
            if letter not in self.column:
                raise ValidationError(f"unknown generator {letter[0]!r}", field='word', value=letter)
            c = self.rows[c][self.column[letter]]
        return c

    def permutation(self, word: Sequence[Tuple[str, int]]) -> Permutation:
        """The permutation c -> c . word of all cosets."""
        return tuple(self.act(c, word) for c in range(len(self.rows)))

    def check(self) -> List[str]:
        """Closure audit: rows complete, inverse columns consistent, relators trivial."""
        self._require_closed()
        problems = []
        n = len(self.rows)
        for c, row in enumerate(self.rows):
            for x, d in enumerate(row):
                if not 0 <= d < n:
                    problems.append(f"coset {c} column {x} undefined")
                elif self.rows[d][x ^ 1] != c:
                    problems.append(f"coset {c} column {x} not inverted by {d}")
        for r in self.presentation.relators:
            if any(self.act(c, r) != c for c in range(n)):
                problems.append(f"relator {format_word(r)} acts nontrivially")
        return problems

    def to_text(self) -> str:
        """Plain-text permutation listing, one line per generator."""
        self._require_closed()
        lines = [f"cosets: {len(self.rows)}"]
        for g in self.presentation.generators:
            images = " ".join(str(self.rows[c][self.column[(g, 1)]]) for c in range(len(self.rows)))
            lines.append(f"{g}: {images}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EnumerationOutcome:
    """Result of a bounded enumeration."""

    cosets_used: int
    budget: int

    @property
    def is_finite(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {'status': 'unknown', 'cosets_used': self.cosets_used, 'budget': self.budget}


@dataclass(frozen=True)
class Finite(EnumerationOutcome):
    """The group has exactly ``order`` elements; ``table`` is closed."""

    order: int = 0
    table: Optional[CosetTable] = field(default=None, compare=False, repr=False)

    @property
    def is_finite(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {'status': 'finite', 'order': self.order, 'cosets_used': self.cosets_used, 'budget': self.budget}

    def __str__(self) -> str:
        return f"Finite({self.order})"


@dataclass(frozen=True)
class Unknown(EnumerationOutcome):
    """No conclusion within the budget."""

    def __str__(self) -> str:
        return f"Unknown({self.cosets_used} cosets used, budget {self.budget})"


def enumerate_cosets(p: Presentation, max_cosets: int = 1_000_000) -> EnumerationOutcome:
    """
    Enumerate the cosets of the trivial subgroup of <p>.

    Args:
        p: Presentation
        max_cosets: Maximum number of coset definitions

    Returns:
        Finite(order, table) when the table closes, Unknown otherwise

    Raises:
        ValidationError: If max_cosets is not positive
    """
    table = CosetTable(p.normalized(), max_cosets)
    if table.run():
        logger.info(f"Enumeration closed: order {table.order}")
        return Finite(table.defined, max_cosets, table.order, table)
    return Unknown(table.defined, max_cosets)


def action_of_word(table: CosetTable, w: Word) -> Permutation:
    """
    Permutation of cosets induced by ``w`` on a closed table.

    Raises:
        ValidationError: If the table is open
    """
    return table.permutation(w)
