"""
Tests for covers: covering maps, lifting, universal balls, square covers and square equivalence.
"""
import itertools
import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.exceptions import CoverError, LiftError, TruncationBoundaryError, WalkError
from covers import (
    Cover,
    Equivalent,
    Inequivalent,
    check_covering_map,
    check_square_lifting,
    deck_group,
    deck_transformation,
    identity_cover,
    lift_walk,
    parse_cover,
    square_cover,
    square_equivalent,
    universal_cover_ball,
)
from graphs import Graph, Walk, cycle_graph, loop_graph, reduce, triangle_with_loop
from groups import analyze_square_group, wedge_sum

SMALL_BUDGET = 2_000


def walks_between(g, start, end, max_length):
    """Every walk from start to end of length at most max_length."""
    found = []
    frontier = [(start,)]
    for _ in range(max_length + 1):
        nxt = []
        for w in frontier:
            if w[-1] == end:
                found.append(w)
            nxt.extend(w + (x,) for x in g.neighbors(w[-1]))
        frontier = nxt
    return found


class TestCoverModel:
    """Test the Cover invariants and file format."""

    def test_identity_cover(self, c4):
        c = identity_cover(c4)
        assert check_covering_map(c)
        assert c.fiber('a') == ('a',)

    def test_not_a_homomorphism(self, c4):
        with pytest.raises(CoverError):
            Cover(c4, c4, {'a': 'a', 'b': 'c', 'c': 'c', 'd': 'd'})

    def test_projection_must_be_total(self, c4):
        with pytest.raises(CoverError):
            Cover(c4, c4, {'a': 'a'})

    def test_not_locally_surjective(self, c4, k2):
        check = check_covering_map(Cover(k2, c4, {'a': 'a', 'b': 'b'}))
        assert not check
        assert check.witness['vertex'] == 'a'
        assert check.witness['reason'] == 'not locally surjective'
        assert check.witness['missing'] == ['d']

    def test_file_round_trip(self, c4):
        ball = universal_cover_ball(c4, 'a', 2)
        assert parse_cover(ball.to_json(), c4) == ball


class TestUniversalBall:
    """Test balls of the universal cover."""

    def test_c4_radius_three(self, c4):
        ball = universal_cover_ball(c4, 'a', 3)
        assert len(ball.total.vertices) == 7
        assert ball.basepoint == 'a'
        assert ball.is_truncated
        assert check_covering_map(ball)

    def test_loop_radius_one(self):
        ball = universal_cover_ball(loop_graph(), 'a', 1)
        assert ball.total.vertices == ('a', 'a.a')

    def test_radius_zero(self, c4):
        assert universal_cover_ball(c4, 'b', 0).total.vertices == ('b',)

    def test_squares_do_not_lift(self, c4):
        check = check_square_lifting(universal_cover_ball(c4, 'a', 4))
        assert not check
        assert check.witness['start'] == 'a'
        assert check.witness['end'] == 'a.b.c.d.a'


class TestLifting:
    """Test unique walk lifting."""

    def test_lift_in_ball(self, c4):
        ball = universal_cover_ball(c4, 'a', 3)
        lifted = lift_walk(ball, Walk(c4, ('a', 'b', 'c')), 'a')
        assert lifted.vertices == ('a', 'a.b', 'a.b.c')

    def test_start_not_over_walk(self, c4):
        ball = universal_cover_ball(c4, 'a', 3)
        with pytest.raises(LiftError):
            lift_walk(ball, Walk(c4, ('b', 'c')), 'a')

    def test_truncation_boundary(self, c4):
        ball = universal_cover_ball(c4, 'a', 3)
        with pytest.raises(TruncationBoundaryError) as exc:
            lift_walk(ball, Walk(c4, ('a', 'b', 'c', 'd', 'a')), 'a')
        assert exc.value.context['step'] == 4

    def test_lift_projects_pointwise(self, rng, c6):
        c = square_cover(c6, max_cosets=SMALL_BUDGET, radius=6)
        for _ in range(30):
            vs = ['a']
            for _ in range(rng.randint(0, 5)):
                vs.append(rng.choice(c6.neighbors(vs[-1])))
            lifted = lift_walk(c, Walk(c6, tuple(vs)), c.basepoint)
            assert [c.projection[v] for v in lifted.vertices] == vs

    @pytest.mark.parametrize('name', ['C4', 's(C4)', 'triangle+loop', 'K4'])
    def test_lift_is_the_only_walk_over_the_base_walk(self, corpus, rng, name):
        g = corpus[name]
        c = square_cover(g)
        for _ in range(20):
            vs = [rng.choice(g.vertices)]
            for _ in range(rng.randint(0, 6)):
                vs.append(rng.choice(g.neighbors(vs[-1])))
            for x in c.fiber(vs[0]):
                over = [(x,)]
                for target in vs[1:]:
                    over = [w + (y,) for w in over for y in c.total.neighbors(w[-1]) if c.projection[y] == target]
                assert len(over) == 1
                assert over[0] == lift_walk(c, Walk(g, tuple(vs)), x).vertices


class TestSquareCover:
    """Test exact and truncated square covers."""

    def test_c4_is_its_own_square_cover(self, c4):
        c = square_cover(c4)
        assert not c.is_truncated
        assert len(c.total.vertices) == 4
        assert c.basepoint == 'a@0'
        assert check_square_lifting(c)

    @pytest.mark.parametrize('name', ['C4', 's(C4)', 'triangle+loop', 'K4', 'loop'])
    def test_exact_covers_are_covers(self, corpus, name):
        g = corpus[name]
        c = square_cover(g)
        order = analyze_square_group(g).outcome.order
        assert len(c.total.vertices) == order * len(g.vertices)
        assert check_covering_map(c)
        assert check_square_lifting(c)

    def test_deck_group_of_triangle_with_loop(self):
        c = square_cover(triangle_with_loop())
        assert len(deck_group(c)) == 2

    @pytest.mark.slow
    def test_realized_z3(self, z3_graph):
        c = square_cover(z3_graph)
        assert len(c.total.vertices) == 129
        assert check_covering_map(c)
        assert check_square_lifting(c)
        assert len(deck_group(c)) == 3

    def test_truncated_fallback(self, c6):
        c = square_cover(c6, max_cosets=SMALL_BUDGET, radius=4)
        assert c.is_truncated
        assert len(c.total.vertices) == 9
        assert check_covering_map(c)

    def test_deck_needs_exact_cover(self, c6):
        c = square_cover(c6, max_cosets=SMALL_BUDGET, radius=3)
        with pytest.raises(CoverError):
            deck_transformation(c, c.basepoint, c.basepoint)

    def test_deck_needs_same_fiber(self, c4):
        c = square_cover(c4)
        with pytest.raises(CoverError):
            deck_transformation(c, 'a@0', 'b@0')

    def test_identity_deck_transformation(self, c4):
        c = square_cover(c4)
        eta = deck_transformation(c, 'a@0', 'a@0')
        assert eta == {v: v for v in c.total.vertices}


class TestSquareEquivalence:
    """Test square equivalence of walks."""

    def test_identical(self, c4):
        p = Walk(c4, ('a', 'b', 'c', 'b'))
        outcome = square_equivalent(c4, p, Walk(c4, ('a', 'b')))
        assert outcome == Equivalent((), 'identical')

    def test_c4_sides(self, c4):
        p, q = Walk(c4, ('a', 'b', 'c')), Walk(c4, ('a', 'd', 'c'))
        outcome = square_equivalent(c4, p, q)
        assert isinstance(outcome, Equivalent)
        if outcome.chain is not None:
            assert outcome.replay(c4, p) == reduce(q)

    def test_no_squares(self, c6):
        p, q = Walk(c6, ('a', 'b', 'c', 'd')), Walk(c6, ('a', 'f', 'e', 'd'))
        assert square_equivalent(c6, p, q) == Inequivalent('no squares')

    def test_endpoints_differ(self, c4):
        with pytest.raises(WalkError):
            square_equivalent(c4, Walk(c4, ('a', 'b')), Walk(c4, ('a', 'd')))

    def test_abelianization_certificate(self, c4):
        hexagon = cycle_graph(6, prefix='h').relabel({'h0': 'a'})
        g = wedge_sum([c4, hexagon], 'a')
        analysis = analyze_square_group(g, max_cosets=SMALL_BUDGET)
        around = Walk(g, ('a', 'h1', 'h2', 'h3', 'h4', 'h5', 'a'))
        outcome = square_equivalent(g, around, Walk(g, ('a',)), analysis=analysis)
        assert outcome == Inequivalent('abelianization')

    def test_agrees_with_exact_cover(self):
        g = triangle_with_loop()
        analysis = analyze_square_group(g)
        c = square_cover(g, analysis=analysis)
        walks = walks_between(g, 'a', 'b', 3)
        for p, q in itertools.islice(itertools.combinations(walks, 2), 40):
            pw, qw = Walk(g, p), Walk(g, q)
            same_end = lift_walk(c, pw, c.basepoint).end == lift_walk(c, qw, c.basepoint).end
            outcome = square_equivalent(g, pw, qw, analysis=analysis)
            assert isinstance(outcome, Equivalent) == same_end, (p, q)
            if isinstance(outcome, Equivalent) and outcome.chain is not None:
                assert outcome.replay(g, pw) == reduce(qw)

    def test_looped_vertex_graph(self):
        g = Graph.from_edges(['a', 'b'], [('a', 'a'), ('b', 'b'), ('a', 'b')])
        p, q = Walk(g, ('a', 'b')), Walk(g, ('a', 'a', 'b', 'b'))
        outcome = square_equivalent(g, p, q)
        assert isinstance(outcome, (Equivalent, Inequivalent))
