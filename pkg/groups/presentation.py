"""
Finitely presented groups.

A Presentation is an ordered tuple of generator symbols and a tuple of
relator words; a word is a tuple of (generator, sign) letters with sign
+1 or -1. Word arithmetic (free and cyclic reduction, inversion,
substitution) is done on sympy free group elements; the tuple form is what
files, reports and the rest of the package exchange.

Text format::

    generators: a b
    relator: a a
    relator: a b a^-1 b^-1
"""

from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group

from core.exceptions import PresentationError

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]

# sympy sets a generator as an attribute of its group when the name is already one
RESERVED_NAMES = frozenset(dir(FreeGroup)) | {'dtype', 'symbols', 'generators', '_gens_set'}


@lru_cache(maxsize=1024)
def free_group_on(names: Tuple[str, ...]) -> FreeGroup:
    """
    The sympy free group on ``names``, generators in that order.

    Symbols are built one by one so that names such as ``a->b`` are never
    parsed as symbol ranges.
    """
    for n in names:
        if n in RESERVED_NAMES:
            raise PresentationError(f"generator name {n!r} is reserved", field='generators', value=n)
    return free_group([Symbol(n) for n in names])[0]


@lru_cache(maxsize=1024)
def _generator_map(group: FreeGroup) -> Dict[str, FreeGroupElement]:
    return {s.name: g for s, g in zip(group.symbols, group.generators)}


def to_element(w: Iterable[Letter], group: Optional[FreeGroup] = None) -> FreeGroupElement:
    """
    The element of ``group`` spelled by ``w`` (freely reduced by sympy).

    Without a group, the free group on the sorted generators of ``w`` is used.
    """
    w = tuple(w)
    if group is None:
        group = free_group_on(tuple(sorted({g for g, _ in w})))
    gens = _generator_map(group)
    try:
        return reduce(mul, (gens[g] ** s for g, s in w), group.identity)
    except KeyError as e:
        raise PresentationError(f"unknown generator {e.args[0]!r}", field='word', value=format_word(w)) from e


def from_element(e: FreeGroupElement) -> Word:
    """Letters of a sympy free group element."""
    return tuple((sym.name, 1 if exp > 0 else -1) for sym, exp in e.array_form for _ in range(abs(exp)))


def invert_word(w: Sequence[Letter]) -> Word:
    """Inverse of w, freely reduced."""
    return from_element(to_element(w).inverse())


def free_reduce(w: Iterable[Letter]) -> Word:
    return from_element(to_element(w))


def cyclic_reduce(w: Iterable[Letter]) -> Word:
    """Free reduction followed by cancellation between the two ends (no rotation)."""
    return from_element(to_element(w).cyclic_reduction())


def conjugacy_key(e: FreeGroupElement) -> FreeGroupElement:
    """Least rotation of the cyclically reduced ``e`` or its inverse in sympy's order."""
    return min(e.cyclic_conjugates() | e.inverse().cyclic_conjugates())


def cyclic_key(w: Word) -> Word:
    """Canonical representative of the cyclic reduction of w under rotation and inversion."""
    e = to_element(w).cyclic_reduction()
    if e.is_identity:
        return ()
    return min(from_element(c) for c in e.cyclic_conjugates() | e.inverse().cyclic_conjugates())


def substitute(w: Sequence[Letter], images: Mapping[str, Word]) -> Word:
    """Image of w under the homomorphism sending each generator g in ``images`` to images[g]."""
    names = {g for g, _ in w}
    for g in list(names):
        names.update(h for h, _ in images.get(g, ()))
    group = free_group_on(tuple(sorted(names)))
    gens = _generator_map(group)
    result = group.identity
    for sym, exp in to_element(w, group).array_form:
        target = to_element(images[sym.name], group) if sym.name in images else gens[sym.name]
        result = result * target ** exp
    return from_element(result)


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(g if s > 0 else f"{g}^-1" for g, s in w)


def parse_word(text: str, generators: Sequence[str] = ()) -> Word:
    """Parse whitespace-separated tokens ``name`` or ``name^-1``."""
    known = set(generators)
    word = []
    for token in text.split():
        if token.endswith('^-1'):
            name, sign = token[:-3], -1
        else:
            name, sign = token, 1
        if not name or '^' in name:
            raise PresentationError(f"bad token {token!r}", field='token', value=token)
        if known and name not in known:
            raise PresentationError(f"unknown generator {name!r}", field='token', value=token)
        word.append((name, sign))
    return tuple(word)


@dataclass(frozen=True)
class Presentation:
    """The group <generators : relators>."""

    generators: Tuple[str, ...] = ()
    relators: Tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(tuple((g, int(s)) for g, s in r) for r in self.relators)
        object.__setattr__(self, 'generators', gens)
        object.__setattr__(self, 'relators', rels)
        known = set(gens)
        if len(known) != len(gens):
            raise PresentationError("duplicate generator symbol", field='generators', value=gens)
        for r in rels:
            for g, s in r:
                if g not in known:
                    raise PresentationError(f"unknown generator {g!r} in relator", field='relators',
                                            value=format_word(r))
                if s not in (1, -1):
                    raise PresentationError("letter sign must be +1 or -1", field='relators', value=(g, s))

    @classmethod
    def of(cls, generators: Sequence[str], *relators: str) -> 'Presentation':
        """Shorthand: ``Presentation.of(['a', 'b'], 'a a', 'a b')``."""
        return cls(tuple(generators), tuple(parse_word(r, generators) for r in relators))

    def normalized(self) -> 'Presentation':
        """Relators freely reduced, empty relators dropped."""
        rels = tuple(r for r in (free_reduce(r) for r in self.relators) if r)
        return Presentation(self.generators, rels)

    def free_group(self) -> FreeGroup:
        return free_group_on(self.generators)

    def relator_elements(self) -> List[FreeGroupElement]:
        """Relators as elements of ``free_group()``, identities dropped."""
        group = self.free_group()
        return [e for e in (to_element(r, group) for r in self.relators) if not e.is_identity]

    def exponent_matrix(self) -> List[List[int]]:
        """Rows are relators, columns generators, entries exponent sums."""
        col = {g: i for i, g in enumerate(self.generators)}
        rows = []
        for r in self.relators:
            row = [0] * len(self.generators)
            for g, s in r:
                row[col[g]] += s
            rows.append(row)
        return rows

    def rename(self, mapping: Mapping[str, str]) -> 'Presentation':
        gens = tuple(mapping.get(g, g) for g in self.generators)
        rels = tuple(tuple((mapping.get(g, g), s) for g, s in r) for r in self.relators)
        return Presentation(gens, rels)

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def to_text(self) -> str:
        lines = ["generators: " + " ".join(self.generators)]
        lines.extend("relator: " + format_word(r) for r in self.relators)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, object]:
        return {
            'generators': list(self.generators),
            'relators': [format_word(r) for r in self.relators],
        }

    def __str__(self) -> str:
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"<{' '.join(self.generators)} : {rels}>"


def parse_presentation(text: str) -> Presentation:
    """
    Parse the presentation text format.

    Blank lines and lines starting with '#' are ignored.

    Raises:
        PresentationError: With the offending line number
    """
    generators = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, rest = line.partition(':')
        key = key.strip()
        if not sep:
            raise PresentationError("expected 'generators:' or 'relator:'", field='line', value=lineno)
        if key == 'generators':
            if generators is not None:
                raise PresentationError("duplicate generators line", field='line', value=lineno)
            generators = tuple(rest.split())
        elif key == 'relator':
            if generators is None:
                raise PresentationError("relator before generators line", field='line', value=lineno)
            try:
                relators.append(parse_word(rest, generators))
            except PresentationError as e:
                raise PresentationError(e.message, field='line', value=lineno,
                                        details={'token': e.context.get('value')}) from e
        else:
            raise PresentationError(f"unknown key {key!r}", field='line', value=lineno)
    if generators is None:
        raise PresentationError("missing generators line")
    return Presentation(generators, tuple(relators))


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """
    <E1 u E2 : R1 u R2>.

    Generators of q that collide with p's are renamed by appending the
    smallest numeric suffix that makes them unique, in q's order.
    """
    used = set(p.generators)
    mapping = {}
    for g in q.generators:
        if g in used:
            k = 1
            while f"{g}{k}" in used or f"{g}{k}" in q.generators:
                k += 1
            mapping[g] = f"{g}{k}"
        used.add(mapping.get(g, g))
    q2 = q.rename(mapping)
    return Presentation(p.generators + q2.generators, p.relators + q2.relators)


def free_factors(p: Presentation) -> List[Presentation]:
    """
    Split ``p`` into sub-presentations over disjoint generator sets.

    Generators are joined when they occur in a common relator; each class
    with its relators is one free factor, so <p> is the free product of
    the returned presentations. Factors follow generator order.
    """
    owner = {g: g for g in p.generators}

    def find(g: str) -> str:
        while owner[g] != g:
            owner[g] = owner[owner[g]]
            g = owner[g]
        return g

    for r in p.relators:
        names = [g for g, _ in r]
        for g in names[1:]:
            a, b = find(names[0]), find(g)
            if a != b:
                owner[b] = a
    groups: Dict[str, List[str]] = {}
    for g in p.generators:
        groups.setdefault(find(g), []).append(g)
    factors = []
    for gens in groups.values():
        members = set(gens)
        rels = tuple(r for r in p.relators if r and r[0][0] in members)
        factors.append(Presentation(tuple(gens), rels))
    return factors
