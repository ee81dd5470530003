"""
Tests for presentations, Tietze simplification, abelianization and edge presentations.
"""
import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.exceptions import PresentationError, ValidationError
from graphs import Graph, bowtie_graph, cycle_graph, spanning_tree, square_c4, triangle_with_loop
from groups import (
    Presentation,
    SimplifyEffort,
    abelianization,
    classify_fundamental,
    compatible_spanning_tree,
    cross_squares,
    cyclic_key,
    cyclic_reduce,
    edge_generator,
    edge_of_generator,
    enumerate_cosets,
    free_factors,
    free_product,
    free_reduce,
    fundamental_presentation,
    has_infinite_order_image,
    is_free_product_decomposition,
    parse_presentation,
    parse_word,
    simplify,
    square_presentation,
    tietze_reduce,
    van_kampen_presentation,
    walk_word,
    wedge_sum,
)
from groups.presentation import invert_word, substitute


class TestWords:
    """Test word reduction helpers."""

    def test_free_reduce(self):
        assert free_reduce(parse_word("a b b^-1 a^-1 c")) == parse_word("c")

    def test_cyclic_reduce(self):
        assert cyclic_reduce(parse_word("a b a^-1")) == parse_word("b")

    def test_cyclic_key_rotation_and_inversion(self):
        w = parse_word("a b c")
        assert cyclic_key(parse_word("c a b")) == cyclic_key(w)
        assert cyclic_key(parse_word("c^-1 b^-1 a^-1")) == cyclic_key(w)

    def test_bad_token(self):
        with pytest.raises(PresentationError):
            parse_word("a^2")

    def test_invert_word_reduces(self):
        assert invert_word(parse_word("a b b^-1")) == parse_word("a^-1")

    def test_substitute_is_a_homomorphism(self):
        images = {'a': parse_word("b c"), 'b': parse_word("c^-1")}
        assert substitute(parse_word("a b a^-1"), images) == parse_word("b c^-1 b^-1")

    def test_edge_names_are_single_generators(self):
        w = parse_word("a->b b->a b->a^-1 c->d")
        assert free_reduce(w) == parse_word("a->b c->d")


class TestPresentationFormat:
    """Test the plain-text presentation format."""

    def test_parse(self):
        p = parse_presentation("# dihedral\ngenerators: a b\nrelator: a a\nrelator: a b a^-1 b^-1\n")
        assert p.generators == ('a', 'b')
        assert p.relators[1] == (('a', 1), ('b', 1), ('a', -1), ('b', -1))

    def test_round_trip(self):
        p = Presentation.of(['a', 'b'], 'a a', 'b a^-1')
        assert parse_presentation(p.to_text()) == p

    def test_unknown_generator_reports_line(self):
        with pytest.raises(PresentationError) as exc:
            parse_presentation("generators: a\nrelator: a b\n")
        assert exc.value.context['value'] == '2'

    def test_relator_before_generators(self):
        with pytest.raises(PresentationError):
            parse_presentation("relator: a\ngenerators: a\n")

    def test_missing_generators(self):
        with pytest.raises(PresentationError):
            parse_presentation("# nothing\n")

    def test_duplicate_generator(self):
        with pytest.raises(PresentationError):
            Presentation(('a', 'a'), ())

    def test_reserved_generator_name(self):
        with pytest.raises(PresentationError):
            Presentation.of(['identity'], 'identity identity').free_group()

    def test_str(self):
        assert str(Presentation.of(['g'], 'g g g')) == "<g : g g g>"


class TestFreeProducts:
    """Test free products and their detection."""

    def test_renames_collisions(self):
        p = free_product(Presentation.of(['a'], 'a a'), Presentation.of(['a'], 'a a a'))
        assert p.generators == ('a', 'a1')
        assert p.relators[1] == parse_word("a1 a1 a1")

    def test_free_factors_split(self):
        p = Presentation.of(['a', 'b', 'c'], 'a a', 'b c b^-1 c^-1')
        factors = free_factors(p)
        assert [f.generators for f in factors] == [('a',), ('b', 'c')]
        assert factors[1].relators == (parse_word("b c b^-1 c^-1"),)

    def test_free_factors_keeps_free_generators(self):
        factors = free_factors(Presentation.of(['a', 'b'], 'a a'))
        assert [f.generators for f in factors] == [('a',), ('b',)]
        assert factors[1].relators == ()


class TestAbelianization:
    """Test Smith-normal-form invariants."""

    def test_z2(self):
        inv = abelianization(Presentation.of(['a', 'b'], 'a a', 'a b'))
        assert inv.free_rank == 0
        assert inv.invariant_factors == (2,)

    def test_free_abelian(self):
        inv = abelianization(Presentation.of(['a', 'b'], 'a b a^-1 b^-1'))
        assert inv.free_rank == 2
        assert inv.is_infinite
        assert inv.order == 0

    def test_free_group_without_relators(self):
        assert abelianization(Presentation.of(['a'])).free_rank == 1

    def test_trivial(self):
        inv = abelianization(Presentation())
        assert inv.free_rank == 0
        assert inv.order == 1
        assert str(inv) == "1"

    def test_elementary_divisors(self):
        inv = abelianization(Presentation.of(['a', 'b'], 'a a', 'b b b'))
        assert inv.invariant_factors == (6,)
        assert inv.elementary_divisors == (2, 3)

    def test_infinite_order_image(self):
        p = Presentation.of(['a', 'b'], 'a a')
        assert has_infinite_order_image(p, parse_word("b"))
        assert not has_infinite_order_image(p, parse_word("a"))
        assert not has_infinite_order_image(p, parse_word("b b^-1"))


class TestTietze:
    """Test Tietze simplification."""

    def test_everything_eliminated(self):
        p = simplify(Presentation.of(['a', 'b'], 'a', 'a b'))
        assert p.generators == ()
        assert p.relators == ()

    def test_substitution_map(self):
        result = tietze_reduce(Presentation.of(['a', 'b'], 'a b^-1'))
        assert result.presentation.generators == ('b',)
        assert result.image(parse_word("a")) == parse_word("b")
        assert result.eliminated == ['a']

    def test_triangle_group_untouched(self):
        p = Presentation.of(['a', 'b'], 'a a', 'b b b', 'a b a b a b')
        assert len(simplify(p).generators) == 2

    def test_redundant_relator_dropped(self):
        p = Presentation.of(['a'], 'a a', 'a a a a')
        result = tietze_reduce(p, SimplifyEffort(depth=4))
        assert result.presentation.relators == (parse_word("a a"),)
        assert result.redundant == 1

    def test_preserves_abelianization(self, corpus, infinite_corpus):
        pool = {**corpus, **infinite_corpus}
        del pool["Z3"]
        for name, g in pool.items():
            raw = square_presentation(g, spanning_tree(g))
            assert abelianization(simplify(raw)) == abelianization(raw), name

    def test_preserves_order(self, corpus):
        pool = dict(corpus)
        del pool["Z3"]
        for name, g in pool.items():
            raw = square_presentation(g, spanning_tree(g))
            before, after = enumerate_cosets(raw), enumerate_cosets(simplify(raw))
            assert before.is_finite and after.is_finite, name
            assert before.order == after.order, name

    @pytest.mark.parametrize('relators, order', [
        (('a a', 'b b b', 'a b a b a b'), 12),
        (('a a', 'b b', 'a b a b a b'), 6),
        (('a a a a', 'a a b^-1 b^-1', 'b^-1 a b a'), 8),
        (('a a a a', 'b b', 'a b a b'), 8),
        (('a b^-1', 'a a a'), 3),
    ])
    def test_preserves_order_of_classical_groups(self, relators, order):
        p = Presentation.of(['a', 'b'], *relators)
        assert enumerate_cosets(simplify(p)).order == order

    def test_power_relators_merged(self):
        result = tietze_reduce(Presentation.of(['a', 'b'], 'a a', 'a a a a a', 'b b b'))
        assert result.presentation == Presentation.of(['b'], 'b b b')
        assert result.eliminated == ['a']


class TestEdgePresentations:
    """Test the edge-generated presentations of graphs."""

    def test_edge_generator_names(self):
        assert edge_generator('a', 'b') == 'a->b'
        assert edge_of_generator('a->b') == ('a', 'b')
        assert walk_word(('a', 'b', 'c')) == (('a->b', 1), ('b->c', 1))

    def test_generators_are_directed_edges(self, c4):
        p = fundamental_presentation(c4, spanning_tree(c4))
        assert len(p.generators) == 8

    def test_fundamental_of_c6_is_z(self):
        g = cycle_graph(6)
        assert abelianization(fundamental_presentation(g, spanning_tree(g))).free_rank == 1

    def test_square_group_of_c4_trivial(self, c4):
        p = simplify(square_presentation(c4, spanning_tree(c4)))
        assert p.generators == ()

    def test_classify_fundamental(self):
        assert classify_fundamental(square_c4()) == (1, 0)
        assert classify_fundamental(triangle_with_loop()) == (1, 1)
        assert classify_fundamental(Graph.from_edges(['a'], [('a', 'a')])) == (0, 1)

    def test_foreign_tree_rejected(self, c4):
        other = Graph.from_edges(['a', 'b'], [('a', 'b')])
        with pytest.raises(ValidationError):
            square_presentation(c4, spanning_tree(other))


class TestVanKampen:
    """Test unions of graphs and their assembled presentations."""

    def test_wedge_sum_records_pieces(self, c4):
        other = Graph.from_edges(['a', 'x', 'y'], [('a', 'x'), ('x', 'y'), ('y', 'a')])
        g = wedge_sum([c4, other], 'a')
        assert len(g.vertices) == 6
        assert g.metadata['wedge']['shared'] == 'a'

    def test_wedge_overlap_rejected(self, c4):
        with pytest.raises(ValidationError):
            wedge_sum([c4, c4], 'a')

    def test_cross_square_detected(self):
        left = Graph.from_edges(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        right = Graph.from_edges(['c', 'd', 'a'], [('c', 'd'), ('d', 'a')])
        assert [s.vertices for s in cross_squares([left, right])] == [('a', 'b', 'c', 'd', 'a')]
        assert not is_free_product_decomposition([left, right])

    def test_no_compatible_tree(self):
        left = Graph.from_edges(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        right = Graph.from_edges(['c', 'd', 'a'], [('c', 'd'), ('d', 'a')])
        with pytest.raises(ValidationError):
            compatible_spanning_tree([left, right])

    def test_wedge_matches_direct_presentation(self, c4):
        hexagon = cycle_graph(6, prefix='h').relabel({'h0': 'a'})
        pieces = [c4, hexagon]
        union = wedge_sum(pieces, 'a')
        assert is_free_product_decomposition(pieces)
        t = compatible_spanning_tree(pieces)
        assembled = van_kampen_presentation(pieces, t)
        direct = square_presentation(union, spanning_tree(union))
        assert abelianization(assembled) == abelianization(direct)
        assert abelianization(assembled).free_rank == 1


class TestSmallGraphGroups:
    """Test the groups of small named graphs and wedges."""

    def test_bowtie(self):
        g = bowtie_graph()
        assert classify_fundamental(g) == (2, 0)
        p = simplify(square_presentation(g, spanning_tree(g)))
        assert len(p.generators) == 2
        assert p.relators == ()
        assert abelianization(p).free_rank == 2

    def test_triangle_with_loop_fundamental(self):
        g = triangle_with_loop()
        p = simplify(fundamental_presentation(g, spanning_tree(g)))
        loop = edge_generator('a', 'a')
        assert len(p.generators) == 2
        assert loop in p.generators
        assert p.relators == (((loop, 1), (loop, 1)),)

    def test_triangle_with_loop_square_group(self):
        g = triangle_with_loop()
        p = simplify(square_presentation(g, spanning_tree(g)))
        assert len(p.generators) == 1
        x = p.generators[0]
        assert p.relators == (((x, 1), (x, 1)),)

    def test_wedge_of_two_hexagons(self):
        left = cycle_graph(6, prefix='h').relabel({'h0': 'a'})
        right = cycle_graph(6, prefix='k').relabel({'k0': 'a'})
        g = wedge_sum([left, right], 'a')
        assert len(g.vertices) == 11
        p = simplify(square_presentation(g, spanning_tree(g)))
        assert len(p.generators) == 2
        assert p.relators == ()
        assert abelianization(p).free_rank == 2

    def test_wedge_of_two_squares(self, c4):
        other = cycle_graph(4, prefix='q').relabel({'q0': 'a'})
        g = wedge_sum([c4, other], 'a')
        assert str(enumerate_cosets(simplify(square_presentation(g, spanning_tree(g))))) == "Finite(1)"
