import itertools
import random

import pytest
from hypothesis import strategies as st

from homred.graph import Graph


@st.composite
def graphs(draw, max_n=10, max_degree=None, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if max_degree is None:
        return Graph(n, chosen)
    deg = [0] * n
    kept = []
    for u, v in chosen:
        if deg[u] < max_degree and deg[v] < max_degree:
            kept.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, kept)


def bfs_dist(g, s):
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


@pytest.fixture
def rng():
    return random.Random(20261015)
