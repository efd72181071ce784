import random

import networkx as nx
from hypothesis import strategies as st

from regspec.graph import Graph, from_edge_list


def k33_minus_edge_pair() -> Graph:
    """Two copies of K_{3,3} - e joined across their degree-2 vertices.

    Cubic, bipartite, edge connectivity 2.
    """
    def copy(o):
        return [(a + o, b + o) for a in range(3) for b in range(3, 6) if (a, b) != (0, 3)]

    return from_edge_list(12, copy(0) + copy(6) + [(0, 9), (6, 3)])


def random_bipartite_regular(half: int, d: int, rng: random.Random) -> Graph:
    """Union of d random perfect matchings between two halves, redrawn until simple."""
    while True:
        edges = set()
        ok = True
        for _ in range(d):
            perm = list(range(half))
            rng.shuffle(perm)
            for a, b in enumerate(perm):
                e = (a, half + b)
                if e in edges:
                    ok = False
                    break
                edges.add(e)
            if not ok:
                break
        if ok:
            return from_edge_list(2 * half, sorted(edges))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, mask) if keep])
