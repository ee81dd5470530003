"""
Gluing-rate probe.

The diameter of the strip graph G_n grows either logarithmically or
linearly in n, according to whether the square cover of the base graph is
finite. The probe measures diameters for n = 1 .. n_max, fits both growth
laws by least squares and cross-references the square group.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from core.exceptions import BudgetExceededError
from graphs import Graph, is_bipartite, require_connected
from groups import SquareGroupAnalysis, analyze_square_group

from .strips import diameter, strip_graph

logger = logging.getLogger(__name__)

LOGARITHMIC = 'Logarithmic'
LINEAR = 'Linear'
BOUNDED = 'Bounded'
INCONCLUSIVE = 'Inconclusive'

RESIDUAL_FLOOR = 1e-9


@dataclass(frozen=True)
class Classification:
    label: str
    linear_residual: Optional[float] = None
    log_residual: Optional[float] = None


def _residual(x: np.ndarray, y: np.ndarray) -> float:
    coefficients = np.polyfit(x, y, 1)
    return float(np.sum((np.polyval(coefficients, x) - y) ** 2))


def classify_diameters(points: Sequence[Tuple[int, int]], fit_points: int = 5,
                       margin: float = 1.5) -> Classification:
    """
    Classify diameter growth from (n, diameter) points.

    Bounded when the trailing half of the series (at least three values)
    is constant. Otherwise a*n + b and c*log2(n) + d are fitted to the last
    ``fit_points`` points with n >= 1, and the fit whose residual is
    smaller by the factor ``margin`` wins; below the margin the series is
    Inconclusive.
    """
    points = sorted((n, d) for n, d in points if n >= 1)
    if len(points) < 3:
        return Classification(INCONCLUSIVE)
    values = [d for _, d in points]
    tail = max(3, len(values) // 2)
    if len(set(values[-tail:])) == 1:
        return Classification(BOUNDED, 0.0, 0.0)

    window = points[-fit_points:]
    n = np.array([p[0] for p in window], dtype=float)
    d = np.array([p[1] for p in window], dtype=float)
    linear = _residual(n, d)
    logarithmic = _residual(np.log2(n), d)
    if linear < RESIDUAL_FLOOR and logarithmic < RESIDUAL_FLOOR:
        label = INCONCLUSIVE
    elif linear * margin < logarithmic:
        label = LINEAR
    elif logarithmic * margin < linear:
        label = LOGARITHMIC
    else:
        label = INCONCLUSIVE
    return Classification(label, linear, logarithmic)


@dataclass(frozen=True)
class ProbeRow:
    n: int
    vertices: int
    diameter: int
    exact: bool
    connected: bool


@dataclass
class ProbeReport:
    """Diameter series of the strip graphs with its classification."""

    rows: List[ProbeRow]
    classification: str
    linear_residual: Optional[float]
    log_residual: Optional[float]
    expected: Optional[str] = None
    bipartite: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def coherent(self) -> Optional[bool]:
        """Whether the classification agrees with the square group, when that is known."""
        if self.expected is None or self.classification == INCONCLUSIVE:
            return None
        if self.expected == LOGARITHMIC:
            return self.classification in (LOGARITHMIC, BOUNDED)
        return self.classification == self.expected

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([vars(r) for r in self.rows], columns=['n', 'vertices', 'diameter', 'exact', 'connected'])

    def to_table(self) -> str:
        lines = [self.to_frame().to_string(index=False)]
        lines.append(f"classification: {self.classification}")
        if self.linear_residual is not None:
            lines.append(f"residuals: linear={self.linear_residual:.4g} log={self.log_residual:.4g}")
        if self.expected is not None:
            lines.append(f"expected from square group: {self.expected}")
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'rows': [vars(r) for r in self.rows],
            'classification': self.classification,
            'residuals': {'linear': self.linear_residual, 'log': self.log_residual},
            'expected': self.expected,
            'coherent': self.coherent,
            'bipartite': self.bipartite,
            'notes': list(self.notes),
        }


def expected_growth(analysis: SquareGroupAnalysis) -> Optional[str]:
    """Growth class implied by the square group, when it is decided."""
    if analysis.is_finite:
        return LOGARITHMIC
    if analysis.is_infinite:
        return LINEAR
    return None


def gluing_rate_probe(g: Graph, n_max: int = 10, walk_cap: int = 500_000, exact_cap: int = 50_000,
                      fit_points: int = 5, margin: float = 1.5, pair_cap: int = 50_000_000,
                      max_cosets: int = 1_000_000,
                      analysis: Optional[SquareGroupAnalysis] = None) -> ProbeReport:
    """
    Measure diam(G_n) for n = 1 .. n_max and classify its growth.

    Strip graphs over budget end the series early with a note. Bipartite
    bases only support phased gluing, which is noted.

    Raises:
        DisconnectedGraphError: If g is not connected
    """
    require_connected(g)
    notes: List[str] = []
    bipartite = bool(is_bipartite(g))
    if bipartite:
        notes.append("bipartite base: only phased block gluing applies; G_n may be disconnected")
        logger.warning("Bipartite base graph; the probe measures phased gluing only")

    rows: List[ProbeRow] = []
    for n in range(1, n_max + 1):
        try:
            strip = strip_graph(g, n, walk_cap, pair_cap)
        except BudgetExceededError as e:
            notes.append(f"n_max reduced to {n - 1}: {e.message}")
            logger.warning(f"Strip graph budget reached at n={n}; n_max reduced to {n - 1}")
            break
        result = diameter(strip, 'exact', exact_cap)
        rows.append(ProbeRow(n, strip.vertex_count, result.value, result.exact, result.connected))
        logger.info(f"G_{n}: {strip.vertex_count} vertices, diameter {result.value}")

    classification = classify_diameters([(r.n, r.diameter) for r in rows], fit_points, margin)
    if analysis is None:
        analysis = analyze_square_group(g, max_cosets=max_cosets)
    report = ProbeReport(rows, classification.label, classification.linear_residual,
                         classification.log_residual, expected_growth(analysis), bipartite, notes)
    if report.coherent is False:
        logger.warning(f"Probe classification {report.classification} disagrees with the square group "
                       f"({report.expected})")
    return report
