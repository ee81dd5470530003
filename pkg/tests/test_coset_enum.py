"""
Tests for Todd-Coxeter enumeration and square-group analysis.
"""
import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.exceptions import DisconnectedGraphError, ValidationError
from graphs import Graph, cycle_graph, triangle_with_loop, with_first_loop
from groups import (
    CosetTable,
    Finite,
    Presentation,
    Unknown,
    action_of_word,
    analyze_square_group,
    enumerate_cosets,
    order_of_square_group,
    parse_word,
    wedge_sum,
)

SMALL_BUDGET = 2_000


def looped_triangle(a, b, c):
    """Triangle a, b, c with a self-loop at b; its square group is Z/2."""
    return Graph.from_edges([a, b, c], [(b, b), (a, b), (b, c), (c, a)])


class TestEnumeration:
    """Test coset enumeration on classical presentations."""

    def test_alternating_group_a4(self):
        outcome = enumerate_cosets(Presentation.of(['a', 'b'], 'a a', 'b b b', 'a b a b a b'))
        assert isinstance(outcome, Finite)
        assert outcome.order == 12
        assert outcome.table.check() == []
        assert str(outcome) == "Finite(12)"

    def test_cyclic(self):
        assert enumerate_cosets(Presentation.of(['g'], 'g g g g g')).order == 5

    def test_symmetric_group_s3(self):
        assert enumerate_cosets(Presentation.of(['a', 'b'], 'a a', 'b b', 'a b a b a b')).order == 6

    def test_trivial_group(self):
        outcome = enumerate_cosets(Presentation())
        assert outcome.is_finite
        assert outcome.order == 1

    def test_redundant_generator(self):
        outcome = enumerate_cosets(Presentation.of(['a', 'b'], 'a a', 'b'))
        assert outcome.order == 2

    def test_infinite_group_runs_out(self):
        outcome = enumerate_cosets(Presentation.of(['a']), max_cosets=100)
        assert isinstance(outcome, Unknown)
        assert not outcome.is_finite
        assert outcome.cosets_used <= 100
        assert outcome.to_dict()['status'] == 'unknown'

    def test_budget_must_be_positive(self):
        with pytest.raises(ValidationError):
            enumerate_cosets(Presentation.of(['a'], 'a a'), max_cosets=0)

    def test_monotone_in_budget(self):
        p = Presentation.of(['a', 'b'], 'a a', 'b b b', 'a b a b a b')
        closed = False
        for budget in [4 * 2 ** k for k in range(11)]:
            outcome = enumerate_cosets(p, max_cosets=budget)
            assert outcome.cosets_used <= budget
            if closed:
                assert outcome.is_finite
            closed = outcome.is_finite
            if closed:
                assert outcome.order == 12
        assert closed

    @pytest.mark.parametrize('relators', [
        ('b a b a b a', 'a a', 'b b b'),
        ('a^-1 a^-1', 'b^-1 b^-1 b^-1', 'b^-1 a^-1 b^-1 a^-1 b^-1 a^-1'),
        ('b a a b^-1', 'a b b b a^-1', 'a b a b a b'),
        ('a b a b a b', 'b b b', 'a a'),
    ])
    def test_invariant_under_relator_rotation_and_inversion(self, relators):
        outcome = enumerate_cosets(Presentation.of(['a', 'b'], *relators))
        assert outcome.order == 12
        assert outcome.table.check() == []

    def test_cosets_used_covers_order(self):
        outcome = enumerate_cosets(Presentation.of(['a', 'b'], 'a a', 'b b', 'a b a b a b'))
        assert outcome.cosets_used >= outcome.order == 6


class TestCosetTable:
    """Test queries on closed tables."""

    def test_relators_act_trivially(self):
        p = Presentation.of(['a', 'b'], 'a a', 'b b b', 'a b a b a b')
        table = enumerate_cosets(p).table
        identity = tuple(range(12))
        for r in p.relators:
            assert action_of_word(table, r) == identity

    def test_generator_permutation(self):
        table = enumerate_cosets(Presentation.of(['g'], 'g g g')).table
        perm = action_of_word(table, parse_word("g"))
        assert sorted(perm) == [0, 1, 2]
        assert perm[0] != 0

    def test_open_table_rejects_queries(self):
        table = CosetTable(Presentation.of(['a']), max_cosets=10)
        assert not table.run()
        with pytest.raises(ValidationError):
            table.act(0, parse_word("a"))

    def test_text_listing(self):
        text = enumerate_cosets(Presentation.of(['g'], 'g g')).table.to_text()
        assert text.splitlines()[0] == "cosets: 2"
        assert text.splitlines()[1] == "g: 1 0"

    def test_standard_numbering(self):
        """Scanning rows then columns, new cosets first appear in increasing order."""
        rows = enumerate_cosets(Presentation.of(['a', 'b'], 'a a', 'b b b', 'a b a b a b')).table.rows
        first_seen = []
        for row in rows:
            for c in row:
                if c != 0 and c not in first_seen:
                    first_seen.append(c)
        assert first_seen == list(range(1, 12))

    def test_repeat_runs_agree(self):
        p = Presentation.of(['a', 'b'], 'a a', 'b b', 'a b a b a b')
        assert enumerate_cosets(p).table.rows == enumerate_cosets(p).table.rows


class TestSquareGroups:
    """Test square-group orders of the graph corpus."""

    @pytest.mark.parametrize('name, order', [
        ('C4', 1),
        ('triangle+loop', 2),
        ('s(C4)', 2),
        ('K4', 2),
        ('loop', 2),
    ])
    def test_finite_orders(self, corpus, name, order):
        analysis = analyze_square_group(corpus[name])
        assert analysis.is_finite
        assert analysis.outcome.order == order
        assert not analysis.is_infinite

    def test_order_shortcut(self):
        assert order_of_square_group(triangle_with_loop()).order == 2

    def test_c6_infinite(self, c6):
        analysis = analyze_square_group(c6, max_cosets=SMALL_BUDGET)
        assert isinstance(analysis.outcome, Unknown)
        assert analysis.abelian.free_rank == 1
        assert analysis.infinite_certificate == 'abelianization'

    def test_looped_c6_abelianization(self):
        analysis = analyze_square_group(with_first_loop(cycle_graph(6)), max_cosets=SMALL_BUDGET)
        assert analysis.abelian.free_rank == 1
        assert analysis.abelian.invariant_factors == (2,)

    def test_free_product_certificate(self):
        g = wedge_sum([looped_triangle('a', 'b', 'c'), looped_triangle('a', 'x', 'y')], 'a')
        analysis = analyze_square_group(g, max_cosets=SMALL_BUDGET)
        assert not analysis.abelian.is_infinite
        assert analysis.abelian.invariant_factors == (2, 2)
        assert analysis.infinite_certificate == 'free product'
        assert analysis.is_infinite
        assert not analysis.is_finite

    def test_walk_images(self, c4, c6):
        assert not analyze_square_group(c4).walk_has_infinite_order(('a', 'b', 'c', 'd', 'a'))
        around = tuple(c6.vertices) + (c6.vertices[0],)
        assert analyze_square_group(c6, max_cosets=SMALL_BUDGET).walk_has_infinite_order(around)

    def test_to_dict(self, c4):
        data = analyze_square_group(c4).to_dict()
        assert data['enumeration']['status'] == 'finite'
        assert data['enumeration']['order'] == 1
        assert data['infinite_certificate'] is None
        assert data['tree_root'] == 'a'

    def test_explicit_root(self, c4):
        assert analyze_square_group(c4, root='c').tree.root == 'c'

    def test_disconnected(self):
        g = Graph.from_edges(['a', 'b'], [])
        with pytest.raises(DisconnectedGraphError):
            analyze_square_group(g)
