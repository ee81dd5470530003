"""
Named graphs used by examples, tests and the CLI.
"""

from typing import Optional, Sequence

from .graph import Graph


def cycle_graph(n: int, prefix: str = 'v', names: Optional[Sequence[str]] = None) -> Graph:
    """The cycle C_n (n >= 3), vertices ``prefix0`` .. ``prefix{n-1}`` unless ``names`` given."""
    vs = list(names) if names is not None else [f"{prefix}{i}" for i in range(n)]
    return Graph.from_edges(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = 'v') -> Graph:
    """A path on n vertices."""
    vs = [f"{prefix}{i}" for i in range(n)]
    return Graph.from_edges(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_graph(n: int, prefix: str = 'v') -> Graph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return Graph.from_edges(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def loop_graph(name: str = 'a') -> Graph:
    """A single vertex with a self-loop."""
    return Graph.from_edges([name], [(name, name)])


def single_vertex(name: str = 'a') -> Graph:
    return Graph.from_edges([name], [])


def square_c4() -> Graph:
    """C4 on a, b, c, d."""
    return cycle_graph(4, names=['a', 'b', 'c', 'd'])


def bowtie_graph() -> Graph:
    """Two triangles sharing the vertex a."""
    return Graph.from_edges(['a', 'b', 'c', 'd', 'e'],
                            [('a', 'b'), ('b', 'c'), ('c', 'a'), ('a', 'd'), ('d', 'e'), ('e', 'a')])


def triangle_with_loop() -> Graph:
    """A triangle a, b, c with a self-loop at a."""
    return Graph.from_edges(['a', 'b', 'c'], [('a', 'a'), ('a', 'b'), ('b', 'c'), ('c', 'a')])


def with_first_loop(g: Graph) -> Graph:
    """``g`` plus a self-loop on its first vertex."""
    return g.with_edges([(g.vertices[0], g.vertices[0])])
