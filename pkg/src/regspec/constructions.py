"""Extremal constructions and test families of regular graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence, Union

from .graph import (
    Graph,
    complement,
    disjoint_union,
    empty_graph,
    from_edge_list,
    is_connected,
    is_regular,
    join,
    read_graphs,
)

MAX_CONFIG_ATTEMPTS = 10_000


def complete(n: int) -> Graph:
    return complement(empty_graph(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def hypercube(dim: int) -> Graph:
    n = 1 << dim
    return from_edge_list(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)])


NAMED = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "petersen": petersen,
    "hypercube": hypercube,
}


def named(name: str, *params: int) -> Graph:
    try:
        build = NAMED[name.replace("-", "_")]
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; choose from {sorted(NAMED)}") from None
    return build(*params)


def matching_complement(t: int) -> Graph:
    """Complement of a perfect matching on t vertices; partners are 2i, 2i+1."""
    if t < 2 or t % 2:
        raise ValueError("t must be an even integer >= 2")
    return complement(from_edge_list(t, [(2 * i, 2 * i + 1) for i in range(t // 2)]))


def x_graph(d: int) -> Graph:
    """The extremal graph X_d on d+1 vertices.

    Odd d: complement of a matching on d-1 vertices joined with K_2.
    Even d: complement of a matching on d-2 vertices joined with K_3.
    The matching-complement vertices come first, so they are the degree d-1
    vertices 0..t-1.
    """
    if d < 3:
        raise ValueError("X_d is defined for d >= 3")
    if d % 2:
        return join(matching_complement(d - 1), complete(2))
    return join(matching_complement(d - 2), complete(3))


def gadget_4regular() -> Graph:
    """Two copies of X_4 (vertices 0-4 and 5-9) plus an apex, vertex 10.

    In X_4 = K_5 minus the edge {0, 1}, vertices 0 and 1 have degree 3; the
    apex is joined to those two vertices in each copy.
    """
    x4 = x_graph(4)
    two = disjoint_union(x4, x4)
    edges = two.edges() + [(10, v) for v in (0, 1, 5, 6)]
    return from_edge_list(11, edges)


@dataclass(frozen=True)
class Membership:
    member: bool
    clauses: dict


def membership_X_family(g: Graph, d: int) -> Membership:
    """Test the defining clauses of the family X(d), reporting each one."""
    degs = g.degrees()
    top = sum(1 for x in degs if x == d)
    clauses = {
        "connected": is_connected(g),
        "irregular": is_regular(g) is None,
        "max_degree": bool(degs) and max(degs) == d,
        "order": g.n >= d + 1,
        "size": 2 * g.m >= d * g.n - d + 1,
        "degree_d_count": top >= (2 if d % 2 else 3),
    }
    return Membership(all(clauses.values()), clauses)


# --- random and exhaustive regular families ---------------------------------

def _pairing(n: int, d: int, rng: random.Random) -> Graph:
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(MAX_CONFIG_ATTEMPTS):
        rng.shuffle(stubs)
        seen = set()
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                break
            e = (u, v) if u < v else (v, u)
            if e in seen:
                break
            seen.add(e)
        else:
            return from_edge_list(n, sorted(seen))
    raise RuntimeError(f"configuration model failed {MAX_CONFIG_ATTEMPTS} times for n={n}, d={d}")


def random_regular(n: int, d: int, seed: Optional[int] = None) -> Graph:
    """Random simple d-regular graph by configuration-model pairing.

    Pairings with a loop or repeated edge are rejected in full. Above
    d = (n-1)/2 the complement of a random (n-1-d)-regular graph is returned
    instead, which keeps the rejection rate low.
    """
    if n * d % 2:
        raise ValueError("n*d must be even")
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    rng = random.Random(seed)
    if 2 * d > n - 1:
        return complement(_pairing(n, n - 1 - d, rng))
    return _pairing(n, d, rng)


def enumerate_regular(n: int, d: int, connected: bool = True) -> Iterator[Graph]:
    """Every labelled d-regular graph on n vertices, each exactly once.

    Vertices are completed in increasing order; vertex v takes its missing
    neighbours among later vertices that still have room.
    """
    if n * d % 2 or d >= n or d < 0:
        return
    need = [d] * n
    rows = [0] * n

    def feasible(v: int) -> bool:
        for w in range(v + 1, n):
            if need[w]:
                room = sum(1 for u in range(v + 1, n) if u != w and need[u] and not rows[w] >> u & 1)
                if need[w] > room:
                    return False
        return True

    def rec(v: int):
        if v == n:
            g = Graph(n, tuple(rows))
            if not connected or is_connected(g):
                yield g
            return
        if need[v] == 0:
            yield from rec(v + 1)
            return
        cand = [u for u in range(v + 1, n) if need[u]]
        r = need[v]
        for kids in combinations(cand, r):
            for u in kids:
                rows[v] |= 1 << u
                rows[u] |= 1 << v
                need[u] -= 1
            need[v] = 0
            if feasible(v):
                yield from rec(v + 1)
            need[v] = r
            for u in kids:
                rows[v] &= ~(1 << u)
                rows[u] &= ~(1 << v)
                need[u] += 1

    yield from rec(0)


def enumerate_connected_regular(n: int, d: int) -> Iterator[Graph]:
    return enumerate_regular(n, d, connected=True)


# --- family specifications ----------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A reproducible family of test graphs.

    ``n`` and ``d`` may each be a single value or a sequence; random families
    draw (n, d) uniformly among the valid combinations for every graph.
    """

    kind: str
    n: Union[int, Sequence[int], None] = None
    d: Union[int, Sequence[int], None] = None
    count: int = 1
    seed: Optional[int] = None
    path: Optional[str] = None
    name: Optional[str] = None
    params: tuple = ()
    connected: bool = False

    def describe(self) -> dict:
        out = {"kind": self.kind}
        for key in ("n", "d", "count", "seed", "path", "name", "params", "connected"):
            val = getattr(self, key)
            if val not in (None, ()):
                out[key] = list(val) if isinstance(val, (tuple, list)) else val
        return out


def _as_list(x) -> list:
    if x is None:
        return []
    return [x] if isinstance(x, int) else list(x)


def valid_pairs(ns, ds) -> list[tuple[int, int]]:
    return [(n, d) for n in _as_list(ns) for d in _as_list(ds) if n * d % 2 == 0 and d < n]


def iter_family(spec: FamilySpec) -> Iterator[Graph]:
    if spec.kind == "named":
        yield named(spec.name, *spec.params)
    elif spec.kind == "exhaustive_regular":
        for n, d in valid_pairs(spec.n, spec.d):
            yield from enumerate_connected_regular(n, d)
    elif spec.kind == "random_regular":
        pairs = valid_pairs(spec.n, spec.d)
        if not pairs:
            raise ValueError("no valid (n, d) combination: need n*d even and d < n")
        rng = random.Random(spec.seed)
        emitted = 0
        while emitted < spec.count:
            n, d = rng.choice(pairs)
            g = random_regular(n, d, rng.randrange(2**32))
            if spec.connected and not is_connected(g):
                continue
            emitted += 1
            yield g
    elif spec.kind == "file":
        with open(spec.path) as fh:
            yield from read_graphs(fh.read())
    else:
        raise ValueError(f"unknown family kind {spec.kind!r}")
