"""Exact toughness, the Win / Ellingham-Zha cut condition and spanning k-trees.

These are brute-force oracles. Toughness values are kept as ``Fraction`` so
comparisons such as ``t >= kappa'/d`` are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Optional, Union

from .graph import Graph, bits, count_components, is_connected, reach


@dataclass(frozen=True)
class Toughness:
    """t(G) as an exact fraction, or infinite (complete graphs).

    ``witness`` is a vertex set attaining the minimum and ``components`` the
    number of components it leaves.
    """

    value: Optional[Fraction]
    witness: tuple = ()
    components: int = 0

    @property
    def infinite(self) -> bool:
        return self.value is None

    def at_least(self, t: Union[Rational, int]) -> bool:
        return self.infinite or self.value >= Fraction(t)

    def exceeds(self, t) -> bool:
        return self.infinite or self.value > Fraction(t)

    def __str__(self):
        return "inf" if self.infinite else str(self.value)


def _without(full: int, s) -> int:
    for v in s:
        full &= ~(1 << v)
    return full


def toughness_exact(g: Graph) -> Toughness:
    """Minimum of |S| / c(G - S) over all S leaving at least two components.

    Sets are enumerated by size, then lexicographically, and the first minimum
    found is kept as the witness. Once |S| / (n - |S|) reaches the running
    minimum no larger set can do strictly better, so the search stops there.
    """
    if not is_connected(g):
        raise ValueError("toughness undefined: graph is not connected")
    n, full = g.n, g.full_mask
    best_num, best_den = None, None
    witness, comps = (), 0
    for size in range(1, n - 1):
        if best_num is not None and size * best_den >= best_num * (n - size):
            break
        for s in combinations(range(n), size):
            c = count_components(g.adj, _without(full, s))
            if c < 2:
                continue
            if best_num is None or size * best_den < best_num * c:
                best_num, best_den = size, c
                witness, comps = s, c
    if best_num is None:
        return Toughness(None)
    return Toughness(Fraction(best_num, best_den), witness, comps)


def is_t_tough(g: Graph, t) -> bool:
    return toughness_exact(g).at_least(t)


def win_condition(g: Graph, k: int) -> tuple[bool, Optional[tuple]]:
    """Check c(G - S) <= (k - 2)|S| + 2 for every S, including the empty set.

    Returns ``(True, None)`` or ``(False, S)`` with S the first violator in
    (size, lexicographic) order.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if not is_connected(g):
        raise ValueError("win condition requires a connected graph")
    n, full = g.n, g.full_mask
    for size in range(n + 1):
        bound = (k - 2) * size + 2
        if n - size <= bound:
            # c(G - S) <= n - |S| can no longer exceed the bound
            break
        for s in combinations(range(n), size):
            if count_components(g.adj, _without(full, s)) > bound:
                return False, s
    return True, None


@dataclass(frozen=True)
class KTreeWitness:
    exists: bool
    tree_edges: tuple = ()
    max_degree: int = 0


def has_spanning_k_tree(g: Graph, k: int) -> KTreeWitness:
    """Exact search for a spanning tree with maximum degree at most ``k``.

    A single tree is grown from vertex 0 in BFS order: each tree vertex, when
    processed, picks its whole set of children among still uncovered
    neighbours. Every spanning tree is reachable this way exactly once. A
    branch is cut when some uncovered vertex can no longer be reached from the
    unprocessed tree vertices through uncovered ones; failed (covered, open)
    states are memoised since the answer does not depend on how they were
    reached.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return KTreeWitness(True, (), 0)
    if not is_connected(g):
        return KTreeWitness(False)

    adj, full = g.adj, g.full_mask
    failed: set = set()
    edges: list = []

    def grow(covered: int, queue: list, idx: int) -> bool:
        if covered == full:
            return True
        if idx == len(queue):
            return False
        key = (covered, sum(1 << v for v in queue[idx:]), idx == 0)
        if key in failed:
            return False
        u = queue[idx]
        spare = k if idx == 0 else k - 1
        cand = list(bits(adj[u] & ~covered))
        later = queue[idx + 1:]
        for size in range(min(spare, len(cand)), -1, -1):
            for kids in combinations(cand, size):
                kid_mask = sum(1 << v for v in kids)
                cov = covered | kid_mask
                rest = full & ~cov
                opened = kid_mask | sum(1 << v for v in later)
                if rest and reach(adj, opened, opened | rest) & rest != rest:
                    continue
                edges.extend((min(u, v), max(u, v)) for v in kids)
                if grow(cov, queue + list(kids), idx + 1):
                    return True
                del edges[len(edges) - size:]
        failed.add(key)
        return False

    if not grow(1, [0], 0):
        return KTreeWitness(False)
    deg = [0] * g.n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return KTreeWitness(True, tuple(sorted(edges)), max(deg))
