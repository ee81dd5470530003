"""
Tietze simplification of presentations.

Three moves are applied until none is available:

1. a generator occurring exactly once in some relator r = u x^e v is
   eliminated by substituting x = (v u)^-e everywhere, and r is dropped;
2. relators are simplified with sympy's ``simplify_presentation`` (powers
   of one-syllable relators shortened, identities and duplicates removed)
   and deduplicated up to rotation and inversion;
3. a relator that a bounded search shows to be a product of conjugates of
   the others is dropped.

Every move preserves the isomorphism class. Words are sympy free group
elements over the original generators throughout; the elimination history
is kept as a substitution map from each original generator to a word over
the surviving generators, so images of original words can be read in the
simplified group.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

from sympy.combinatorics.fp_groups import simplify_presentation
from sympy.combinatorics.free_groups import FreeGroupElement

from .presentation import Presentation, Word, conjugacy_key, from_element, substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplifyEffort:
    """Bounded-search budget for redundant-relator detection."""

    depth: int = 4
    max_states: int = 2_000
    max_relators: int = 60


@dataclass
class TietzeResult:
    """A simplified presentation plus the images of the original generators."""

    presentation: Presentation
    substitutions: Dict[str, Word] = field(default_factory=dict)
    eliminated: List[str] = field(default_factory=list)
    redundant: int = 0

    def image(self, w: Word) -> Word:
        """Image in the simplified presentation of a word over the original generators."""
        return substitute(w, self.substitutions)


def _name(gen: FreeGroupElement) -> str:
    return gen.array_form[0][0].name


def _solve(relator: FreeGroupElement, gen: FreeGroupElement) -> FreeGroupElement:
    """Solve ``relator`` (containing ``gen`` once) for ``gen``."""
    k = relator.exponent_sum(gen)
    i = relator.index(gen ** k)
    chi = relator.subword(i + 1, len(relator)) * relator.subword(0, i)
    # gen^k chi = 1  =>  gen = chi^-k
    return chi ** (-k)


def _derivable(target: FreeGroupElement, others: List[FreeGroupElement], effort: SimplifyEffort) -> bool:
    """
    Whether ``target`` reduces to the identity by multiplying with
    conjugates of ``others`` (each step must cancel at least one letter).
    """
    if not others or effort.depth <= 0:
        return False
    pieces: Dict[FreeGroupElement, List[FreeGroupElement]] = {}
    for s in others:
        for piece in sorted(s.cyclic_conjugates() | s.inverse().cyclic_conjugates()):
            pieces.setdefault(piece[0], []).append(piece)
    max_len = len(target) + max(len(s) for s in others)
    start = conjugacy_key(target)
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        word, depth = queue.popleft()
        if depth >= effort.depth:
            continue
        for rotated in sorted(word.cyclic_conjugates()):
            for piece in pieces.get(rotated[-1].inverse(), ()):
                nxt = (rotated * piece).cyclic_reduction()
                if nxt.is_identity:
                    return True
                if len(nxt) > max_len:
                    continue
                key = conjugacy_key(nxt)
                if key in seen:
                    continue
                if len(seen) >= effort.max_states:
                    return False
                seen.add(key)
                queue.append((key, depth + 1))
    return False


class _RelatorPool:
    """Relators indexed by generator name, deduplicated up to rotation and inversion."""

    def __init__(self):
        self.words: Dict[int, FreeGroupElement] = {}
        self._key_of: Dict[int, FreeGroupElement] = {}
        self._by_key: Dict[FreeGroupElement, int] = {}
        self.occurrences: Dict[str, Set[int]] = {}
        self._next = 0

    def add(self, w: FreeGroupElement) -> None:
        w = w.cyclic_reduction()
        if w.is_identity:
            return
        key = conjugacy_key(w)
        if key in self._by_key:
            return
        rid = self._next
        self._next += 1
        self.words[rid] = w
        self._key_of[rid] = key
        self._by_key[key] = rid
        for sym, _ in w.array_form:
            self.occurrences.setdefault(sym.name, set()).add(rid)

    def remove(self, rid: int) -> FreeGroupElement:
        w = self.words.pop(rid)
        del self._by_key[self._key_of.pop(rid)]
        for sym, _ in w.array_form:
            self.occurrences.get(sym.name, set()).discard(rid)
        return w

    def pick_elimination(self, order: Dict[str, int]) -> Optional[tuple]:
        """(relator id, generator) of the cheapest single-occurrence generator."""
        best = None
        best_key = None
        for rid, w in self.words.items():
            for gen in w.contains_generators():
                if w.generator_count(gen) != 1:
                    continue
                g = _name(gen)
                growth = (len(w) - 2) * (len(self.occurrences[g]) - 1)
                key = (growth, len(w), order[g], rid)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (rid, gen)
        return best

    def relators(self) -> List[FreeGroupElement]:
        return list(self.words.values())


def tietze_reduce(p: Presentation, effort: Optional[SimplifyEffort] = None) -> TietzeResult:
    """
    Simplify ``p`` and record the substitution map.

    Args:
        p: Presentation to simplify
        effort: Budget for redundant-relator detection

    Returns:
        TietzeResult; ``substitutions`` maps every generator of ``p``
    """
    effort = effort or SimplifyEffort()
    group = p.free_group()
    generators = dict(zip(p.generators, group.generators))
    gens = list(p.generators)
    order = {g: i for i, g in enumerate(gens)}
    substitutions: Dict[str, FreeGroupElement] = dict(generators)
    used_by: Dict[str, Set[str]] = {g: {g} for g in gens}
    pool = _RelatorPool()
    for r in p.relator_elements():
        pool.add(r)
    eliminated = []
    redundant = 0

    while True:
        choice = pool.pick_elimination(order)
        if choice is not None:
            rid, gen = choice
            g = _name(gen)
            image = _solve(pool.remove(rid), gen)
            for other in sorted(pool.occurrences.get(g, ())):
                pool.add(pool.remove(other).eliminate_word(gen, image, _all=True))
            for orig in sorted(used_by.pop(g, ()), key=order.__getitem__):
                substitutions[orig] = substitutions[orig].eliminate_word(gen, image, _all=True)
                for sym, _ in image.array_form:
                    used_by[sym.name].add(orig)
            gens.remove(g)
            eliminated.append(g)
            continue
        relators = pool.relators()
        if not gens or not relators:
            break
        _, simplified = simplify_presentation([generators[g] for g in gens], relators)
        pool = _RelatorPool()
        for r in simplified:
            pool.add(r)
        redundant += max(0, len(relators) - len(pool.words))
        if pool.pick_elimination(order) is None:
            break

    relators = sorted(pool.relators())
    if 0 < len(relators) <= effort.max_relators:
        for r in sorted(relators, key=len, reverse=True):
            others = [s for s in relators if s is not r]
            if _derivable(r, others, effort):
                relators = others
                redundant += 1

    result = Presentation(tuple(gens), tuple(from_element(r) for r in relators))
    logger.debug(f"Simplified {len(p.generators)}/{len(p.relators)} to "
                 f"{len(result.generators)}/{len(result.relators)} generators/relators "
                 f"({redundant} redundant relator(s) dropped)")
    return TietzeResult(result, {g: from_element(w) for g, w in substitutions.items()}, eliminated, redundant)


def simplify(p: Presentation, effort: Optional[SimplifyEffort] = None) -> Presentation:
    """Tietze-simplify ``p``; the group is unchanged up to isomorphism."""
    return tietze_reduce(p, effort).presentation
