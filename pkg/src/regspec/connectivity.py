"""Exact connectivity invariants: edge and vertex connectivity, l-connectivity,
independence number.

Everything here is exact. Edge and vertex connectivity come from unit-capacity
max-flow (Menger); l-connectivity and the independence number are exponential
searches meant for graphs of roughly 16 vertices or fewer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, bits, count_components, is_complete, is_connected


def max_flow_unit(
    g: Graph, source: int, sink: int, vertex_capacities: bool = False, cutoff: Optional[int] = None
) -> int:
    """Maximum number of edge-disjoint (or internally vertex-disjoint) paths.

    With ``vertex_capacities`` every vertex other than the endpoints is split
    into an in/out pair joined by a unit arc. Augmenting paths are found by
    BFS. If ``cutoff`` is given the search stops once the flow reaches it.
    """
    if source == sink:
        raise ValueError("source and sink must differ")
    if not (0 <= source < g.n and 0 <= sink < g.n):
        raise ValueError("endpoint outside the graph")

    # residual capacities, cap[u][v]
    cap: dict[int, dict[int, int]] = {}

    def arc(u, v, c):
        cap.setdefault(u, {})
        cap.setdefault(v, {})
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v].setdefault(u, 0)

    if vertex_capacities:
        big = g.n
        for v in range(g.n):
            arc(2 * v, 2 * v + 1, big if v in (source, sink) else 1)
        for u, v in g.edges():
            arc(2 * u + 1, 2 * v, 1)
            arc(2 * v + 1, 2 * u, 1)
        s, t = 2 * source, 2 * sink + 1
    else:
        for u, v in g.edges():
            arc(u, v, 1)
            arc(v, u, 1)
        s, t = source, sink
    if s not in cap or t not in cap:
        return 0

    flow = 0
    while cutoff is None or flow < cutoff:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            break
        v = t
        while parent[v] is not None:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
    return flow


def edge_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if not is_connected(g):
        return 0
    best = min(g.degrees())
    for u in range(1, g.n):
        best = min(best, max_flow_unit(g, 0, u, cutoff=best))
        if best == 0:
            break
    return best


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); n-1 for complete graphs by convention."""
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    if is_complete(g):
        return g.n - 1
    if not is_connected(g):
        return 0
    best = min(g.degrees())
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, max_flow_unit(g, u, v, vertex_capacities=True, cutoff=best))
    return best


def l_connectivity(g: Graph, l: int) -> tuple[int, tuple[int, ...]]:
    """kappa_l(G) and the lexicographically first minimising vertex set.

    Smallest S whose removal leaves at least ``l`` components or fewer than
    ``l`` vertices. Sizes are tried in increasing order so the first hit is
    optimal.
    """
    if l < 2:
        raise ValueError("l-connectivity is defined for l >= 2")
    full = g.full_mask
    for size in range(g.n + 1):
        if g.n - size <= l - 1:
            return size, tuple(range(size))
        for s in combinations(range(g.n), size):
            alive = full
            for v in s:
                alive &= ~(1 << v)
            if count_components(g.adj, alive) >= l:
                return size, s
    raise AssertionError("unreachable: removing n-l+1 vertices always succeeds")


def independence_number(g: Graph) -> int:
    """alpha(G) by branch and bound, branching on a maximum-degree vertex."""
    adj = g.adj
    best = 0

    def search(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        # vertices with no neighbour left in cand can all be taken
        pick, pick_deg = -1, -1
        free = 0
        for v in bits(cand):
            dv = (adj[v] & cand).bit_count()
            if dv == 0:
                free |= 1 << v
            elif dv > pick_deg:
                pick, pick_deg = v, dv
        if free:
            search(cand & ~free, size + free.bit_count())
            return
        bit = 1 << pick
        search(cand & ~bit & ~adj[pick], size + 1)
        search(cand & ~bit, size)

    search(g.full_mask, 0)
    return best


@dataclass
class ConnectivityProfile:
    kappa: int
    kappa_prime: int
    alpha: Optional[int] = None
    kappa_l: dict = field(default_factory=dict)


def connectivity_profile(g: Graph, ls: Iterable[int] = (), exact: bool = True) -> ConnectivityProfile:
    """Collect kappa, kappa' and, when ``exact``, alpha and the requested kappa_l."""
    prof = ConnectivityProfile(vertex_connectivity(g), edge_connectivity(g))
    if exact:
        prof.alpha = independence_number(g)
        prof.kappa_l = {l: l_connectivity(g, l) for l in ls}
    return prof
