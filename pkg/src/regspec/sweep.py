"""Soundness sweep: every Certified certificate is re-checked by an exact oracle."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .certifiers import ALL_THEOREMS, Certificate, Status, TheoremId, run_certifiers
from .connectivity import edge_connectivity, l_connectivity
from .constructions import FamilySpec, iter_family
from .graph import Graph, parse_graph6, reach, to_graph6
from .spectra import adjacency_spectrum
from .toughness import KTreeWitness, Toughness, has_spanning_k_tree, toughness_exact

EXPONENTIAL_CAP = 16
KTREE_CAP = 22


class SizeGuardError(ValueError):
    pass


class Oracles:
    """Exact invariants of one graph, computed on first use."""

    def __init__(self, g: Graph, kappa_prime: Optional[int] = None):
        self.g = g
        self._t: Optional[Toughness] = None
        self._kl: dict = {}
        self._kt: dict = {}
        self._kp = kappa_prime

    @property
    def toughness(self) -> Toughness:
        if self._t is None:
            self._t = toughness_exact(self.g)
        return self._t

    @property
    def kappa_prime(self) -> int:
        if self._kp is None:
            self._kp = edge_connectivity(self.g)
        return self._kp

    def kappa_l(self, l: int) -> int:
        if l not in self._kl:
            self._kl[l] = l_connectivity(self.g, l)[0]
        return self._kl[l]

    def ktree(self, k: int) -> KTreeWitness:
        if k not in self._kt:
            self._kt[k] = has_spanning_k_tree(self.g, k)
        return self._kt[k]


def valid_k_tree(g: Graph, w: KTreeWitness, k: int) -> bool:
    """A witness must be n-1 edges of g forming a connected spanning tree, max degree <= k."""
    if not w.exists or len(w.tree_edges) != g.n - 1:
        return False
    rows = [0] * g.n
    for u, v in w.tree_edges:
        if not g.has_edge(u, v):
            return False
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    degs = [r.bit_count() for r in rows]
    return max(degs, default=0) <= k and max(degs, default=0) == w.max_degree and (
        g.n == 1 or reach(rows, 1, g.full_mask) == g.full_mask
    )


def check_certificate(cert: Certificate, oracles: Oracles) -> Optional[str]:
    """None when the oracle confirms a Certified conclusion, else a description."""
    if cert.status is not Status.CERTIFIED:
        return None
    tid, p = cert.theorem_id, cert.params
    if tid is TheoremId.L_CONN:
        val = oracles.kappa_l(p["l"])
        return None if val >= p["k"] else f"kappa_{p['l']} = {val} < {p['k']}"
    if tid is TheoremId.EDGE_CONN_CIOABA:
        val = oracles.kappa_prime
        return None if val >= p["k"] else f"kappa' = {val} < {p['k']}"
    if tid is TheoremId.K_TREE:
        w = oracles.ktree(p["k"])
        if not w.exists:
            return f"no spanning {p['k']}-tree"
        return None if valid_k_tree(oracles.g, w, p["k"]) else "invalid k-tree witness"
    t = oracles.toughness
    if tid is TheoremId.TOUGH_ONE:
        return None if t.at_least(1) else f"t = {t} < 1"
    if tid is TheoremId.BIPAR_TOUGH:
        return None if not t.infinite and t.value == 1 else f"t = {t} != 1"
    if tid is TheoremId.TAU_FLOOR:
        return None if t.at_least(cert.bound) else f"t = {t} < {cert.bound}"
    if tid is TheoremId.BROUWER_CONJ:
        return None if t.exceeds(Fraction(cert.bound)) else f"t = {t} <= {cert.bound!r}"
    raise ValueError(f"unknown theorem {tid}")


def examine(g6: str, theorems: tuple, ktree_ks: tuple) -> tuple[list, list]:
    """Run certificates on one graph and confirm every Certified one.

    Returns ``(statuses, violations)`` where statuses is a list of
    ``(theorem_id, status)`` pairs.
    """
    g = parse_graph6(g6)
    spec = adjacency_spectrum(g)
    kp = edge_connectivity(g) if g.n >= 2 else None
    certs = run_certifiers(g, theorems, spectrum=spec, kappa_prime=kp, ktree_ks=ktree_ks)
    oracles = Oracles(g, kp)
    statuses, violations = [], []
    for cert in certs:
        statuses.append((cert.theorem_id.value, cert.status.value))
        problem = check_certificate(cert, oracles)
        if problem:
            violations.append(
                {"graph6": g6, "theorem_id": cert.theorem_id.value, "params": dict(cert.params), "detail": problem}
            )
    return statuses, violations


def _examine_star(args):
    return examine(*args)


@dataclass
class SweepReport:
    family: dict
    theorems: list
    graphs_examined: int = 0
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def run_sweep(
    family: FamilySpec | Iterable[Graph],
    theorems: Iterable[TheoremId] = ALL_THEOREMS,
    ktree_ks: Iterable[int] = (3, 4),
    workers: int = 1,
    max_n: Optional[int] = EXPONENTIAL_CAP,
) -> SweepReport:
    """Certify and oracle-check every graph of ``family``.

    Counts are per theorem and status; violations are sorted so the report
    does not depend on worker scheduling.
    """
    start = time.perf_counter()
    theorems = tuple(TheoremId(t) for t in theorems)
    ktree_ks = tuple(ktree_ks)
    if isinstance(family, FamilySpec):
        desc, graphs = family.describe(), iter_family(family)
    else:
        desc, graphs = {"kind": "in-memory"}, family

    def jobs():
        for g in graphs:
            if max_n is not None and g.n > max_n:
                raise SizeGuardError(f"graph with n = {g.n} exceeds the oracle cap {max_n}")
            yield to_graph6(g), theorems, ktree_ks

    report = SweepReport(desc, [t.value for t in theorems])
    counts: dict = {t.value: Counter() for t in theorems}
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = pool.map(_examine_star, jobs(), chunksize=64)
            for statuses, bad in results:
                report.graphs_examined += 1
                for tid, st in statuses:
                    counts[tid][st] += 1
                report.violations.extend(bad)
    else:
        for job in jobs():
            statuses, bad = examine(*job)
            report.graphs_examined += 1
            for tid, st in statuses:
                counts[tid][st] += 1
            report.violations.extend(bad)
    report.counts = {tid: {s.value: c[s.value] for s in Status} for tid, c in counts.items()}
    report.violations.sort(key=lambda v: (v["theorem_id"], v["graph6"], sorted(v["params"].items())))
    report.wall_time_s = time.perf_counter() - start
    return report
