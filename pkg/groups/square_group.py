"""
One-stop analysis of the square group of a graph.

``analyze_square_group`` builds the spanning tree, the raw edge
presentation, its Tietze simplification with substitution map, a bounded
coset enumeration and the abelianization, so that covers, realization
checks and the CLI share a single enumeration per graph.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from graphs import Graph, SpanningTree, spanning_tree

from .abelian import AbelianInvariants, abelianization, has_infinite_order_image
from .coset_table import EnumerationOutcome, enumerate_cosets
from .edge_groups import square_presentation, walk_word
from .presentation import Presentation, Word, free_factors
from .tietze import SimplifyEffort, TietzeResult, tietze_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SquareGroupAnalysis:
    """Everything known about the square group of ``graph``."""

    graph: Graph
    tree: SpanningTree
    raw: Presentation
    tietze: TietzeResult
    outcome: EnumerationOutcome
    abelian: AbelianInvariants

    @property
    def simplified(self) -> Presentation:
        return self.tietze.presentation

    @property
    def substitutions(self) -> Dict[str, Word]:
        return self.tietze.substitutions

    @property
    def is_finite(self) -> bool:
        return self.outcome.is_finite

    @property
    def infinite_certificate(self) -> Optional[str]:
        """
        How the group is known to be infinite, if it is.

        "abelianization" when the abelianization has positive free rank;
        "free product" when the simplified presentation splits into two or
        more free factors with nontrivial abelianizations.
        """
        if self.abelian.is_infinite:
            return 'abelianization'
        nontrivial = [f for f in free_factors(self.simplified) if abelianization(f).order != 1]
        if len(nontrivial) >= 2:
            return 'free product'
        return None

    @property
    def is_infinite(self) -> bool:
        return self.infinite_certificate is not None

    def walk_image(self, vertices: Sequence[str]) -> Word:
        """Image of a walk (as vertices) in the simplified presentation."""
        return self.tietze.image(walk_word(vertices))

    def walk_has_infinite_order(self, vertices: Sequence[str]) -> bool:
        return has_infinite_order_image(self.simplified, self.walk_image(vertices))

    def to_dict(self) -> dict:
        return {
            'vertices': len(self.graph.vertices),
            'edges': self.graph.edge_count,
            'tree_root': self.tree.root,
            'raw': {'generators': len(self.raw.generators), 'relators': len(self.raw.relators)},
            'simplified': self.simplified.to_dict(),
            'enumeration': self.outcome.to_dict(),
            'abelianization': self.abelian.to_dict(),
            'infinite_certificate': self.infinite_certificate,
        }


def analyze_square_group(g: Graph, root: Optional[str] = None, max_cosets: int = 1_000_000,
                         effort: Optional[SimplifyEffort] = None,
                         tree: Optional[SpanningTree] = None) -> SquareGroupAnalysis:
    """
    Present, simplify, enumerate and abelianize the square group of ``g``.

    Args:
        g: A connected graph
        root: Spanning tree root (first vertex by default)
        max_cosets: Coset enumeration budget
        effort: Redundant-relator search budget
        tree: Explicit spanning tree; overrides root

    Returns:
        SquareGroupAnalysis

    Raises:
        DisconnectedGraphError: If g is not connected
    """
    if tree is None:
        tree = spanning_tree(g, root)
    raw = square_presentation(g, tree)
    reduced = tietze_reduce(raw, effort)
    outcome = enumerate_cosets(reduced.presentation, max_cosets)
    invariants = abelianization(reduced.presentation)
    logger.info(f"Square group of {len(g.vertices)}-vertex graph: {outcome}, abelianization {invariants}")
    return SquareGroupAnalysis(g, tree, raw, reduced, outcome, invariants)


def order_of_square_group(g: Graph, max_cosets: int = 1_000_000) -> EnumerationOutcome:
    """Bounded coset enumeration of the simplified square presentation of ``g``."""
    return analyze_square_group(g, max_cosets=max_cosets).outcome
