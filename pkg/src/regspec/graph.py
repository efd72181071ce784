"""Simple undirected graphs stored as adjacency bitmasks.

Vertex ``v`` is bit ``1 << v``; row ``adj[v]`` is the neighbourhood of ``v``.
The graphs handled here are small (a few dozen vertices), so a dense
row-per-vertex encoding keeps subset operations cheap and hands off directly
to the eigensolver.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

VertexSet = frozenset

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    """Malformed graph input; ``offset`` is the byte position when known."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``0..n-1``; exact duplicate edges are collapsed."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {tuple(pair)} has a vertex outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge {tuple(pair)} is a loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# --- graph6 -----------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header), n <= 62."""
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126", base + i)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graphs with more than {GRAPH6_MAX_N} vertices are not supported", base)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(s) - 1 != need:
        raise GraphFormatError(
            f"expected {need} data bytes for n={n}, found {len(s) - 1}", base + min(len(s), need + 1)
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 output is limited to n <= {GRAPH6_MAX_N}; use the edge-list format")
    out = [chr(g.n + 63)]
    acc = nacc = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# --- edge-list text ---------------------------------------------------------

_HEADER_RE = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def looks_like_edge_list(first_line: str) -> bool:
    return bool(_HEADER_RE.match(first_line))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = _HEADER_RE.match(lines[0])
    if not head:
        raise GraphFormatError(f"bad edge-list header {lines[0]!r}, expected 'n m'")
    n, m = int(head.group(1)), int(head.group(2))
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1} lines")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def read_graphs(text: str) -> list[Graph]:
    """Auto-detect the format by the first non-blank line.

    An ``"n m"`` header means a single edge-list graph; anything else is read
    as graph6, one graph per line.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("no graph in input")
    if looks_like_edge_list(lines[0]):
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in lines if ln != GRAPH6_HEADER]


# --- structure --------------------------------------------------------------

def count_components(adj: Sequence[int], alive: int) -> int:
    """Number of components of the subgraph induced by the vertex mask ``alive``."""
    c = 0
    while alive:
        frontier = alive & -alive
        seen = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & alive & ~seen
            seen |= new
            frontier |= new
        alive &= ~seen
        c += 1
    return c


def reach(adj: Sequence[int], start: int, alive: int) -> int:
    """Mask of vertices reachable from the ``start`` mask inside ``alive``."""
    seen = frontier = start & alive
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & alive & ~seen
        seen |= new
        frontier |= new
    return seen


def components(g: Graph) -> tuple[int, list[int]]:
    """Component count and a per-vertex component id (ids numbered from 0)."""
    label = [-1] * g.n
    c = 0
    for v in range(g.n):
        if label[v] < 0:
            for u in bits(reach(g.adj, 1 << v, g.full_mask)):
                label[u] = c
            c += 1
    return c, label


def is_connected(g: Graph) -> bool:
    return g.n > 0 and reach(g.adj, 1, g.full_mask) == g.full_mask


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_regular(g: Graph) -> Optional[int]:
    degs = g.degrees()
    if not degs:
        return None
    return degs[0] if all(x == degs[0] for x in degs) else None


def bipartition(g: Graph) -> Optional[tuple[frozenset, frozenset]]:
    """Proper 2-colouring, component by component; ``None`` on an odd cycle."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    side_a = frozenset(v for v in range(g.n) if colour[v] == 0)
    return side_a, frozenset(range(g.n)) - side_a


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, relabelled compactly; returns the old->new map."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    relabel = {old: new for new, old in enumerate(kept)}
    rows = []
    for old in kept:
        row = 0
        for u in bits(g.adj[old]):
            if u in relabel:
                row |= 1 << relabel[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows)), relabel


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    gone = set(removed)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    g_part = g.full_mask
    h_part = h.full_mask << g.n
    rows = [row | h_part for row in g.adj] + [(row << g.n) | g_part for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))
