"""
Compiling group presentations into graphs.

``realize`` builds a graph whose square group is the presented group:

1. a base vertex ``omega`` and, per generator, a petal cycle of length N
   through omega;
2. per relator r, a relation cycle of length M_r = N * |r|;
3. rung edges tying each relation cycle to the petals along the relator
   word, shifted diagonally where the rung pattern is 1;
4. a flat quadrangulation filling each relation cycle.

Vertex names are fixed: ``omega``, ``a:<gen>:<k>``, ``r:<i>:<k>`` and the
filler vertices ``r:<i>:<name>`` (``i<k>`` for the inner ring, ``hub``).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from core.exceptions import RealizationError
from graphs import Graph, enumerate_squares, is_bipartite, is_connected, with_first_loop
from groups import (
    AbelianInvariants,
    EnumerationOutcome,
    Presentation,
    abelianization,
    analyze_square_group,
    enumerate_cosets,
    free_product,
    free_reduce,
    simplify,
)

from .quadrangulation import FlatQuadrangulation, quadrangulate_cycle

logger = logging.getLogger(__name__)

OMEGA = 'omega'

NuPattern = Union[str, Mapping[int, Sequence[int]]]
FillerFactory = Callable[[int], FlatQuadrangulation]


@dataclass
class RealizationConfig:
    """
    Parameters of the construction.

    ``nu`` is ``"zero"``, ``"alternating"`` (k mod 2) or a mapping from
    relator index to an explicit 0/1 sequence of length M_r; relators
    missing from the mapping use zeros.
    """

    petal: int = 6
    nu: NuPattern = 'zero'
    filler: FillerFactory = field(default=quadrangulate_cycle, repr=False)

    def validate(self) -> List[str]:
        errors = []
        if self.petal < 6 or self.petal % 2:
            errors.append("petal length must be an even integer >= 6")
        if isinstance(self.nu, str) and self.nu not in ('zero', 'alternating'):
            errors.append("nu must be 'zero', 'alternating' or explicit sequences")
        return errors

    def rungs(self, index: int, m: int) -> List[int]:
        if self.nu == 'zero':
            return [0] * m
        if self.nu == 'alternating':
            return [k % 2 for k in range(m)]
        seq = list(self.nu.get(index, [0] * m))  # type: ignore[union-attr]
        if len(seq) != m or any(x not in (0, 1) for x in seq):
            raise RealizationError(f"rung pattern of relator {index} must be {m} values in {{0, 1}}",
                                   field='nu', value=index)
        return seq

    def describe_nu(self) -> str:
        return self.nu if isinstance(self.nu, str) else 'explicit'


def petal_vertex(gen: str, k: int) -> str:
    return f"a:{gen}:{k}"


def relation_vertex(index: int, k: int) -> str:
    return f"r:{index}:{k}"


def reduce_presentation_input(p: Presentation) -> Presentation:
    """
    Normalize a presentation for realization.

    Relators are freely reduced and empty ones dropped; a generator that is
    itself a relator (either sign) is deleted together with its occurrences
    elsewhere. Repeats until nothing changes.
    """
    gens = list(p.generators)
    rels = [free_reduce(r) for r in p.relators]
    while True:
        rels = [r for r in rels if r]
        single = next((r[0][0] for r in rels if len(r) == 1), None)
        if single is None:
            break
        gens.remove(single)
        rels = [free_reduce(tuple(x for x in r if x[0] != single)) for r in rels]
        logger.debug(f"Removed generator {single!r} equal to a relator")
    return Presentation(tuple(gens), tuple(rels))


def _phi(relator, k: int, n: int) -> str:
    """Image of relation-cycle vertex k on the petals."""
    offset = k % n
    if offset == 0:
        return OMEGA
    gen, sign = relator[k // n]
    return petal_vertex(gen, offset if sign > 0 else n - offset)


def _check_filler(q: FlatQuadrangulation, m: int) -> None:
    problems = q.validate()
    if problems:
        raise RealizationError("filler is not a flat quadrangulation", field='filler', details={'problem': problems[0]})
    if not q.has_simple_border or len(q.border) - 1 != m:
        raise RealizationError(f"filler border must be a simple {m}-cycle", field='filler')
    if q.interior_border_contacts():
        raise RealizationError("filler has an internal vertex with two border neighbours", field='filler',
                               value=q.interior_border_contacts()[0])


def realize(p: Presentation, cfg: Optional[RealizationConfig] = None) -> Graph:
    """
    Build a graph whose square group is presented by ``p``.

    Args:
        p: A presentation already passed through reduce_presentation_input
        cfg: Construction parameters (N = 6, zero rungs, wheel fillers by default)

    Returns:
        The graph; ``metadata['report']`` carries per-component vertex counts
        and ``metadata['pieces']`` the vertex set of each relator piece

    Raises:
        RealizationError: On unreduced input, bad parameters or a bad filler
    """
    cfg = cfg or RealizationConfig()
    errors = cfg.validate()
    if errors:
        raise RealizationError(errors[0], field='config')
    if reduce_presentation_input(p) != p:
        raise RealizationError("presentation must be reduced first (reduce_presentation_input)")
    n = cfg.petal

    vertices: List[str] = [OMEGA]
    edges: List[Tuple[str, str]] = []
    petal_vertices: List[str] = [OMEGA]
    for gen in p.generators:
        names = [petal_vertex(gen, k) for k in range(1, n)]
        vertices.extend(names)
        petal_vertices.extend(names)
        path = [OMEGA] + names + [OMEGA]
        edges.extend((path[k], path[k + 1]) for k in range(n))

    pieces: List[List[str]] = []
    filler_vertices = 0
    rung_count = 0
    cycle_vertices = 0
    for index, relator in enumerate(p.relators):
        m = n * len(relator)
        cycle = [relation_vertex(index, k) for k in range(m)]
        vertices.extend(cycle)
        cycle_vertices += m
        edges.extend((cycle[k], cycle[(k + 1) % m]) for k in range(m))
        for k, nu in enumerate(cfg.rungs(index, m)):
            edges.append((cycle[(k + nu) % m], _phi(relator, (k - nu) % m, n)))
            rung_count += 1

        filler = cfg.filler(m)
        _check_filler(filler, m)
        mapping = {v: cycle[k] for k, v in enumerate(filler.border[:-1])}
        inner = [v for v in filler.graph.vertices if v not in mapping]
        mapping.update({v: f"r:{index}:{v}" for v in inner})
        glued = filler.relabel(mapping)
        vertices.extend(mapping[v] for v in inner)
        filler_vertices += len(inner)
        on_cycle = set(cycle)
        edges.extend(e for e in glued.graph.undirected_edges() if not (e[0] in on_cycle and e[1] in on_cycle))
        pieces.append(petal_vertices + cycle + [mapping[v] for v in inner])

    report = {
        'generators': len(p.generators),
        'relators': len(p.relators),
        'petal': n,
        'nu': cfg.describe_nu(),
        'omega': 1,
        'petal_vertices': len(p.generators) * (n - 1),
        'relation_cycle_vertices': cycle_vertices,
        'filler_vertices': filler_vertices,
        'rung_edges': rung_count,
        'vertices': len(vertices),
    }
    g = Graph.from_edges(vertices, edges, {'report': report, 'pieces': pieces})
    logger.info(f"Realized {len(p.generators)} generator(s), {len(p.relators)} relator(s) "
                f"as a {len(vertices)}-vertex graph")
    return g


def add_self_loop(g: Graph) -> Graph:
    """
    Add a self-loop on the first vertex.

    For a bipartite g the square group becomes the free product of the old
    one with Z/2; otherwise a warning is logged.
    """
    if not is_connected(g) or not is_bipartite(g):
        logger.warning("Adding a self-loop to a non-bipartite graph; the free-product identity does not apply")
    return with_first_loop(g)


def self_loop_presentation(p: Presentation) -> Presentation:
    """The group expected after ``add_self_loop`` on realize(p): p * <s : s s>."""
    return free_product(p, Presentation.of(['s'], 's s'))


def squares_within_pieces(g: Graph) -> bool:
    """Whether every square of a realized graph lies inside a single relator piece."""
    pieces = [set(vs) for vs in g.metadata.get('pieces', [])]
    for s in enumerate_squares(g):
        if not any(set(s.vertices) <= piece for piece in pieces):
            return False
    return True


@dataclass(frozen=True)
class RealizationReport:
    """Cross-check of a presentation against the square group of its realization."""

    status: str
    presentation_outcome: EnumerationOutcome
    graph_outcome: EnumerationOutcome
    presentation_abelian: AbelianInvariants
    graph_abelian: AbelianInvariants
    squares_in_pieces: bool

    @property
    def consistent(self) -> bool:
        return self.status == 'consistent'

    def to_dict(self) -> dict:
        return {
            'status': self.status,
            'presentation': {'enumeration': self.presentation_outcome.to_dict(),
                             'abelianization': self.presentation_abelian.to_dict()},
            'graph': {'enumeration': self.graph_outcome.to_dict(),
                      'abelianization': self.graph_abelian.to_dict()},
            'squares_in_pieces': self.squares_in_pieces,
        }


def verify_realization(p: Presentation, g: Graph, max_cosets: int = 1_000_000) -> RealizationReport:
    """
    Compare ``p`` with the square group of ``g = realize(p)``.

    Orders are compared when both enumerations close; abelianization
    invariants are always compared. Any mismatch gives status "REFUTED".
    """
    p_outcome = enumerate_cosets(simplify(p), max_cosets)
    p_abelian = abelianization(p)
    analysis = analyze_square_group(g, max_cosets=max_cosets)
    status = 'consistent'
    if p_outcome.is_finite and analysis.outcome.is_finite and p_outcome.order != analysis.outcome.order:
        status = 'REFUTED'
    if p_abelian != analysis.abelian:
        status = 'REFUTED'
    report = RealizationReport(status, p_outcome, analysis.outcome, p_abelian, analysis.abelian,
                               squares_within_pieces(g))
    logger.info(f"Realization check: {status}")
    return report
