"""
Tests for graph-core: parsing, connectivity, bipartiteness, spanning trees and squares.
"""
import itertools
import json
import os
import sys

import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.exceptions import DisconnectedGraphError, GraphFormatError, ValidationError
from graphs import (
    Graph,
    SpanningTree,
    Square,
    bowtie_graph,
    complete_graph,
    connected_components,
    enumerate_squares,
    is_bipartite,
    is_connected,
    is_mixing,
    loop_graph,
    parse_graph,
    path_graph,
    single_vertex,
    spanning_tree,
    square_c4,
    triangle_with_loop,
    with_first_loop,
)


def brute_force_square_classes(g):
    """Every 4-tuple of vertices forming a square, grouped by rotation and reversal."""
    classes = set()
    for vs in itertools.product(g.vertices, repeat=4):
        closed = vs + (vs[0],)
        if not all(g.has_edge(closed[i], closed[i + 1]) for i in range(4)):
            continue
        if vs[0] == vs[2] or vs[1] == vs[3]:
            continue
        forward = list(vs)
        backward = [vs[0]] + forward[:0:-1]
        classes.add(frozenset(tuple(seq[r:] + seq[:r]) for seq in (forward, backward) for r in range(4)))
    return classes


def random_graph(rng, size):
    """A random graph on ``size`` vertices with loops, possibly disconnected."""
    names = [f"v{i}" for i in range(size)]
    edges = [(u, v) for u, v in itertools.combinations_with_replacement(names, 2) if rng.random() < 0.45]
    return Graph.from_edges(names, edges)


class TestParseGraph:
    """Test the graph file format."""

    def test_c4_symmetrized(self):
        """Each undirected edge listed once becomes two ordered pairs."""
        text = json.dumps({"vertices": ["a", "b", "c", "d"],
                           "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]})
        g = parse_graph(text)
        assert len(g.edges) == 8
        assert g.edge_count == 4
        assert g.has_edge('b', 'a')

    def test_self_loop_is_its_own_reverse(self):
        g = parse_graph('{"vertices":["a"],"edges":[["a","a"]]}')
        assert g.edge_count == 1
        assert g.edges == frozenset({('a', 'a')})
        assert g.loops() == ['a']

    def test_dangling_endpoint(self):
        with pytest.raises(ValidationError) as exc:
            parse_graph('{"vertices":["a"],"edges":[["a","b"]]}')
        assert "b" in str(exc.value)

    def test_syntax_error_has_position(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph('{"vertices": ["a"], "edges": [')
        assert exc.value.context['field'] == 'position'
        assert 'line 1' in exc.value.context['value']

    def test_duplicate_vertex(self):
        with pytest.raises(ValidationError):
            parse_graph('{"vertices":["a","a"],"edges":[]}')

    def test_round_trip_through_to_json(self, c4):
        assert parse_graph(c4.to_json()) == c4


class TestConnectivity:
    """Test connectivity and components."""

    def test_c4_connected(self, c4):
        assert is_connected(c4)

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(['a', 'b', 'c', 'd'], [('a', 'b'), ('c', 'd')])
        assert not is_connected(g)
        assert connected_components(g) == [['a', 'b'], ['c', 'd']]

    def test_single_vertex_vacuous(self):
        assert is_connected(single_vertex())


class TestBipartite:
    """Test bipartiteness with witnesses."""

    def test_c4_bipartite(self, c4):
        result = is_bipartite(c4)
        assert result
        assert result.coloring['a'] != result.coloring['b']

    def test_loop_is_odd_cycle(self, c4):
        result = is_bipartite(with_first_loop(c4))
        assert not result
        assert result.odd_cycle is not None

    def test_realization_of_z3_bipartite(self, z3_graph):
        assert is_bipartite(z3_graph)

    def test_disconnected_raises(self):
        g = Graph.from_edges(['a', 'b', 'c', 'd'], [('a', 'b'), ('c', 'd')])
        with pytest.raises(DisconnectedGraphError):
            is_bipartite(g)

    def test_mixing(self, c4):
        assert not is_mixing(c4)
        assert is_mixing(with_first_loop(c4))
        assert not is_mixing(Graph.from_edges(['a', 'b', 'c'], [('a', 'a'), ('b', 'c')]))


class TestSpanningTree:
    """Test deterministic BFS spanning trees."""

    def test_c4_bfs_tree(self, c4):
        # BFS from a takes both neighbours first, so the tree is {ab, ad, bc}, not the path a-b-c-d
        t = spanning_tree(c4, 'a')
        assert t.edges == frozenset({('a', 'b'), ('a', 'd'), ('b', 'c')})
        assert t.parent('c') == 'b'

    def test_loop_graph_has_empty_tree(self):
        t = spanning_tree(loop_graph())
        assert t.edges == frozenset()

    def test_tree_input_is_itself(self):
        g = path_graph(5)
        t = spanning_tree(g)
        assert {frozenset(e) for e in t.edges} == {frozenset(e) for e in g.undirected_edges()}

    def test_rejects_cycle(self, c4):
        with pytest.raises(ValidationError):
            SpanningTree.from_edges(c4, [('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')], 'a')

    def test_disconnected(self):
        g = Graph.from_edges(['a', 'b'], [])
        with pytest.raises(DisconnectedGraphError):
            spanning_tree(g)


class TestSquares:
    """Test square enumeration."""

    def test_c4_single_square(self, c4):
        squares = enumerate_squares(c4)
        assert [s.vertices for s in squares] == [('a', 'b', 'c', 'd', 'a')]

    def test_bowtie_has_none(self):
        assert enumerate_squares(bowtie_graph()) == []

    def test_loops_give_degenerate_square(self):
        g = Graph.from_edges(['a', 'b'], [('a', 'a'), ('b', 'b'), ('a', 'b')])
        found = {s.vertices for s in enumerate_squares(g)}
        assert ('a', 'a', 'b', 'b', 'a') in found

    def test_variants_are_eight(self, c4):
        square = enumerate_squares(c4)[0]
        assert len(set(square.variants())) == 8

    def test_backtracking_cycle_rejected(self, c4):
        with pytest.raises(ValidationError):
            Square.on(c4, ['a', 'b', 'a', 'b'])

    def test_canonical_is_stable(self, c4):
        assert Square.on(c4, ['c', 'b', 'a', 'd']).canonical(c4).vertices == ('a', 'b', 'c', 'd', 'a')

    @pytest.mark.parametrize('name', ['C4', 'bowtie', 'triangle+loop', 'K4+loop', 'K5'])
    def test_matches_brute_force(self, name):
        g = {
            'C4': square_c4(),
            'bowtie': bowtie_graph(),
            'triangle+loop': triangle_with_loop(),
            'K4+loop': with_first_loop(complete_graph(4)),
            'K5': complete_graph(5),
        }[name]
        squares = enumerate_squares(g)
        found = {frozenset(v[:4] for v in s.variants()) for s in squares}
        assert found == brute_force_square_classes(g)
        assert len(squares) == len(found)

    def test_random_graphs_match_brute_force(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8))
            squares = enumerate_squares(g)
            assert {frozenset(v[:4] for v in s.variants()) for s in squares} == brute_force_square_classes(g)
            assert len(squares) == len({s.vertices for s in squares})


class TestGraphOperations:
    """Test relabel, union and DOT export."""

    def test_relabel(self, c4):
        g = c4.relabel({'a': 'x'})
        assert g.vertices[0] == 'x'
        assert g.has_edge('x', 'b')

    def test_union_merges_shared_vertices(self, c4):
        other = Graph.from_edges(['a', 'e'], [('a', 'e')])
        g = c4.union(other)
        assert len(g.vertices) == 5
        assert g.edge_count == 5

    def test_dot_export(self, c4):
        dot = c4.to_dot('c4')
        assert dot.startswith('graph "c4" {')
        assert '"a" -- "b";' in dot
