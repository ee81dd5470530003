"""
Shared fixtures: seeded randomness and the graph corpus.
"""
import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import config_manager
from graphs import (
    Graph,
    bowtie_graph,
    complete_graph,
    cycle_graph,
    loop_graph,
    square_c4,
    triangle_with_loop,
    with_first_loop,
)
from groups import Presentation
from realization import realize

DEFAULT_SEED = 20240917


@pytest.fixture
def seed():
    """Seed for property runs; override with HSK_SEED."""
    return int(os.environ.get('HSK_SEED', DEFAULT_SEED))


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config singleton at a file that does not exist."""
    monkeypatch.setenv('HSK_CONFIG', str(tmp_path / 'absent.toml'))
    config_manager.refresh_config()
    yield
    config_manager._config_instance = None


@pytest.fixture
def c4():
    return square_c4()


@pytest.fixture
def c6():
    return cycle_graph(6, names=['a', 'b', 'c', 'd', 'e', 'f'])


@pytest.fixture
def k2():
    return Graph.from_edges(['a', 'b'], [('a', 'b')])


@pytest.fixture
def jumble():
    """Edges a-b, b-c, b-d, c-d."""
    return Graph.from_edges(['a', 'b', 'c', 'd'], [('a', 'b'), ('b', 'c'), ('b', 'd'), ('c', 'd')])


@pytest.fixture(scope='session')
def z3_graph():
    """realize(<g : g^3>), 43 vertices."""
    return realize(Presentation.of(['g'], 'g g g'))


@pytest.fixture
def corpus(z3_graph):
    """Small connected graphs with finite square groups."""
    return {
        'C4': square_c4(),
        's(C4)': with_first_loop(square_c4()),
        'triangle+loop': triangle_with_loop(),
        'K4': complete_graph(4),
        'loop': loop_graph(),
        'Z3': z3_graph,
    }


@pytest.fixture
def infinite_corpus():
    """Connected graphs whose square groups have infinite abelianization."""
    return {
        'C6': cycle_graph(6),
        's(C6)': with_first_loop(cycle_graph(6)),
        'bowtie': bowtie_graph(),
    }
