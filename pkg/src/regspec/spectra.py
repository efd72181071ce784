"""Adjacency spectra of small graphs and the extremal threshold theta(d)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, bits, induced_subgraph, mask_of

_EPS = np.finfo(float).eps
ITERATION_FACTOR = 50


class EigensolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending; ``tolerance`` is an absolute error bound."""

    values: tuple
    tolerance: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def lam(self, k: int) -> float:
        return lambda_k(self, k)


@dataclass(frozen=True)
class Threshold:
    d: int
    value: float

    def __float__(self):
        return self.value


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix to tridiagonal form.

    Returns ``(diag, off)`` with ``off[i]`` the (i+1, i) entry; ``a`` is not
    modified.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    off = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm_x = math.sqrt(float(x @ x))
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0])
        v = x
        v[0] -= alpha
        norm_v = math.sqrt(float(v @ v))
        if norm_v == 0.0:
            off[k] = x[0]
            continue
        v /= norm_v
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        q = p - (v @ p) * v
        sub -= 2.0 * (np.outer(v, q) + np.outer(q, v))
        off[k] = alpha
    if n >= 2:
        off[n - 2] = a[n - 1, n - 2]
    return np.diag(a).copy(), off


def tridiagonal_ql(diag: Sequence[float], off: Sequence[float]) -> list[float]:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL.

    At most ``50 n`` sweeps in total; exceeding that raises EigensolverError.
    """
    d = [float(x) for x in diag]
    n = len(d)
    e = [float(x) for x in off] + [0.0] * (n - len(off))
    cap = ITERATION_FACTOR * max(n, 1)
    sweeps = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > cap:
                raise EigensolverError(f"QL iteration did not converge within {cap} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # early deflation: restart the sweep on the split block
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def symmetric_eigenvalues(a: np.ndarray) -> list[float]:
    """All eigenvalues of a real symmetric matrix, sorted descending."""
    diag, off = tridiagonalize(a)
    return sorted(tridiagonal_ql(diag, off), reverse=True)


def adjacency_spectrum(g: Graph) -> Spectrum:
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    vals = symmetric_eigenvalues(g.adjacency_matrix())
    # backward error of Householder + QL is O(n eps ||A||_F)
    frob = math.sqrt(2 * g.m)
    tol = 8 * g.n * _EPS * max(1.0, frob)
    return Spectrum(tuple(vals), tol)


def lambda_k(s: Spectrum, k: int) -> float:
    """The k-th largest eigenvalue, 1-based."""
    if not 1 <= k <= len(s.values):
        raise IndexError(f"eigenvalue index {k} outside 1..{len(s.values)}")
    return s.values[k - 1]


def lambda_abs(s: Spectrum) -> float:
    """max(|lambda_2|, |lambda_n|)."""
    if len(s.values) < 2:
        raise ValueError("lambda needs at least two eigenvalues")
    return max(abs(s.values[1]), abs(s.values[-1]))


def theta(d: int) -> Threshold:
    if d < 3:
        raise ValueError("theta(d) is defined for d >= 3")
    extra = 12 if d % 2 == 0 else 8
    return Threshold(d, (d - 2 + math.sqrt(d * d + extra)) / 2)


def average_degree_bound(g: Graph) -> float:
    """2m/n, a lower bound on the largest adjacency eigenvalue."""
    if g.n == 0:
        raise ValueError("average degree of the empty graph")
    return 2 * g.m / g.n


def multiplicity(s: Spectrum, value: float, tol: float = 1e-7) -> int:
    return sum(1 for x in s.values if abs(x - value) <= tol)


@dataclass(frozen=True)
class InterlacingReport:
    p: int
    lambda_p_graph: float
    lambda_p_union: float
    min_lambda1_parts: float
    passed: bool


def check_interlacing_corollary(g: Graph, parts: Sequence[Sequence[int]], tol: float = 1e-9) -> InterlacingReport:
    """Compare lambda_p(G) >= lambda_p(G[union]) >= min_i lambda_1(G[S_i]).

    ``parts`` must be nonempty, pairwise disjoint, with no edges between
    different parts.
    """
    masks = []
    for part in parts:
        if not part:
            raise ValueError("empty part")
        mk = mask_of(part)
        if mk >> g.n:
            raise ValueError("part references a vertex outside the graph")
        masks.append(mk)
    p = len(masks)
    if p == 0:
        raise ValueError("need at least one part")
    union = 0
    for i, mk in enumerate(masks):
        if union & mk:
            raise ValueError(f"part {i} overlaps an earlier part")
        union |= mk
    for i, mk in enumerate(masks):
        outside = union & ~mk
        for v in bits(mk):
            if g.adj[v] & outside:
                raise ValueError(f"part {i} has an edge to another part at vertex {v}")
    lam_g = lambda_k(adjacency_spectrum(g), p)
    lam_union = lambda_k(adjacency_spectrum(induced_subgraph(g, bits(union))[0]), p)
    tops = [adjacency_spectrum(induced_subgraph(g, bits(mk))[0]).values[0] for mk in masks]
    low = min(tops)
    ok = lam_g >= lam_union - tol and lam_union >= low - tol
    return InterlacingReport(p, lam_g, lam_union, low, ok)
