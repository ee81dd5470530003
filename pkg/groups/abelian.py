"""
Abelianization of finitely presented groups.

The abelianized group is Z^n modulo the row lattice of the relator exponent
matrix; its invariants come from the integer Smith normal form, computed
with sympy's DomainMatrix over ZZ.
"""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from sympy import Matrix, ZZ, factorint
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .presentation import Presentation, Word


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank x Z/d1 x ... with ``invariant_factors`` d1 | d2 | ... (all > 1)."""

    free_rank: int
    invariant_factors: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def elementary_divisors(self) -> Tuple[int, ...]:
        """Prime-power decomposition of the torsion part, sorted."""
        out: List[int] = []
        for d in self.invariant_factors:
            out.extend(p ** k for p, k in factorint(d).items())
        return tuple(sorted(out))

    @property
    def is_infinite(self) -> bool:
        return self.free_rank > 0

    @property
    def order(self) -> int:
        """Order of the abelianization (0 when infinite)."""
        if self.free_rank:
            return 0
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    def to_dict(self) -> dict:
        return {
            'free_rank': self.free_rank,
            'invariant_factors': list(self.invariant_factors),
            'elementary_divisors': list(self.elementary_divisors),
        }

    def __str__(self) -> str:
        parts = ([f"Z^{self.free_rank}"] if self.free_rank else []) + [f"Z/{d}" for d in self.invariant_factors]
        return " x ".join(parts) if parts else "1"


def _smith_diagonal(rows: Sequence[Sequence[int]], ncols: int) -> List[int]:
    """Nonzero Smith invariants (absolute values) of an integer matrix."""
    if not rows or ncols == 0:
        return []
    size = max(len(rows), ncols)
    padded = [[ZZ(row[j]) if j < ncols else ZZ(0) for j in range(size)] for row in rows]
    padded.extend([[ZZ(0)] * size for _ in range(size - len(rows))])
    dm = DomainMatrix(padded, (size, size), ZZ)
    return [abs(int(d)) for d in invariant_factors(dm) if d != 0]


def abelianization(p: Presentation) -> AbelianInvariants:
    """
    Invariants of the abelianized group.

    Returns:
        AbelianInvariants(free rank, invariant factors > 1)
    """
    diagonal = _smith_diagonal(p.exponent_matrix(), len(p.generators))
    rank = len(diagonal)
    factors = tuple(sorted(d for d in diagonal if d > 1))
    return AbelianInvariants(len(p.generators) - rank, factors)


def has_infinite_order_image(p: Presentation, w: Word) -> bool:
    """
    True when ``w`` has infinite order in the abelianization of ``p``, i.e.
    its exponent vector is outside the rational span of the relator rows.
    A True answer certifies that ``w`` is nontrivial in the group.
    """
    col = {g: i for i, g in enumerate(p.generators)}
    vector = [0] * len(p.generators)
    for g, s in w:
        vector[col[g]] += s
    if not any(vector):
        return False
    rows = p.exponent_matrix()
    if not rows:
        return True
    base = Matrix(rows)
    return Matrix(rows + [vector]).rank() > base.rank()
