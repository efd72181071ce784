"""JSON-ready analysis reports."""

from __future__ import annotations

import dataclasses
import math
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Optional

from .certifiers import (
    EPSILON,
    Certificate,
    TheoremId,
    brouwer_conjecture_bound,
    certify_bipartite_toughness,
    certify_edge_connectivity,
    certify_l_connectivity,
    certify_spanning_k_tree,
    certify_toughness_one,
    spectral_connectivity_bounds,
    spectral_toughness_bounds,
    theta_or_none,
    toughness_floor,
)
from .connectivity import edge_connectivity, independence_number, l_connectivity, vertex_connectivity
from .graph import GRAPH6_MAX_N, Graph, bipartition, is_connected, is_regular, to_graph6
from .spectra import Spectrum, adjacency_spectrum, lambda_abs
from .toughness import Toughness, has_spanning_k_tree, toughness_exact

SIG_DIGITS = 12


def jsonable(obj: Any) -> Any:
    """Convert reports to plain JSON types; floats keep 12 significant digits."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(f"{obj:.{SIG_DIGITS}g}")
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, Toughness):
        return toughness_json(obj)
    if isinstance(obj, Certificate):
        return certificate_json(obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(x) for x in items]
    if hasattr(obj, "item"):
        return jsonable(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def toughness_json(t: Toughness) -> dict:
    if t.infinite:
        return {"infinite": True}
    return {
        "num": t.value.numerator,
        "den": t.value.denominator,
        "witness": sorted(t.witness),
        "components": t.components,
    }


def certificate_json(c: Certificate) -> dict:
    return {
        "theorem_id": c.theorem_id.value,
        "status": c.status.value,
        "conclusion": c.conclusion,
        "statement": c.statement,
        "params": jsonable(c.params),
        "hypotheses": [
            {"name": h.name, "value": jsonable(h.value), "relation": h.relation,
             "threshold": jsonable(h.threshold), "ok": h.ok}
            for h in c.hypotheses
        ],
        "index_used": c.index_used,
        "lambda_at_index": jsonable(c.lambda_at_index),
        "threshold": jsonable(c.threshold),
        "bound": jsonable(c.bound),
        "epsilon": c.epsilon,
        "note": c.note,
    }


def graph_summary(g: Graph) -> dict:
    d = is_regular(g)
    return {
        "n": g.n,
        "m": g.m,
        "degree": d,
        "regular": d is not None,
        "connected": is_connected(g),
        "bipartite": bipartition(g) is not None,
        "graph6": to_graph6(g) if g.n <= GRAPH6_MAX_N else None,
    }


def spectrum_json(s: Spectrum, d: Optional[int]) -> dict:
    return {
        "values": jsonable(list(s.values)),
        "tolerance": jsonable(s.tolerance),
        "lambda": jsonable(lambda_abs(s)) if len(s) >= 2 else None,
        "theta": jsonable(theta_or_none(d)),
    }


def certificates_for(
    g: Graph,
    spectrum: Spectrum,
    kappa_prime: Optional[int],
    theorems: Iterable[TheoremId],
    k: Optional[int] = None,
    l: Optional[int] = None,
    eps: float = EPSILON,
) -> list[Certificate]:
    """Certificates for a single selection of parameters, as used by the CLI."""
    out = []
    d = is_regular(g)
    for tid in theorems:
        tid = TheoremId(tid)
        if tid is TheoremId.L_CONN:
            kk = k if k is not None else 2
            ll = l if l is not None else kk
            out.append(certify_l_connectivity(g, kk, ll, spectrum, kappa_prime, eps))
        elif tid is TheoremId.TOUGH_ONE:
            out.append(certify_toughness_one(g, spectrum, kappa_prime, eps))
        elif tid is TheoremId.BIPAR_TOUGH:
            out.append(certify_bipartite_toughness(g, spectrum, kappa_prime, eps))
        elif tid is TheoremId.TAU_FLOOR:
            out.append(toughness_floor(g, kappa_prime))
        elif tid is TheoremId.BROUWER_CONJ:
            out.append(brouwer_conjecture_bound(g, spectrum, kappa_prime))
        elif tid is TheoremId.K_TREE:
            out.append(certify_spanning_k_tree(g, k if k is not None else 3, spectrum, kappa_prime, eps))
        elif tid is TheoremId.EDGE_CONN_CIOABA:
            kk = k if k is not None else max(2, d or 2)
            out.append(certify_edge_connectivity(g, kk, spectrum, eps))
    return out


def analyze(
    g: Graph,
    ls: Iterable[int] = (2, 3),
    ks: Iterable[int] = (2, 3),
    lconn_k: int = 2,
    exponential: bool = True,
    ktrees: bool = True,
    eps: float = EPSILON,
) -> dict:
    """Full report: structure, spectrum, exact invariants, certificates, bounds.

    With ``exponential`` false the toughness, kappa_l and alpha fields are
    null; ``ktrees`` does the same for the spanning k-tree search.
    """
    ls, ks = list(ls), list(ks)
    d = is_regular(g)
    spec = adjacency_spectrum(g)
    kp = edge_connectivity(g) if g.n >= 2 else None
    report: dict = {"graph": graph_summary(g), "spectrum": spectrum_json(spec, d)}

    conn: dict = {
        "kappa": vertex_connectivity(g) if g.n >= 2 else None,
        "kappa_prime": kp,
        "kappa_l": None,
        "alpha": None,
    }
    if exponential:
        conn["alpha"] = independence_number(g)
        conn["kappa_l"] = {}
        for l in ls:
            val, wit = l_connectivity(g, l)
            conn["kappa_l"][str(l)] = {"value": val, "witness": list(wit)}
    report["connectivity"] = conn

    if exponential and is_connected(g):
        report["toughness"] = toughness_json(toughness_exact(g))
    else:
        report["toughness"] = None

    if ktrees:
        trees = {}
        for k in ks:
            w = has_spanning_k_tree(g, k)
            trees[str(k)] = {"exists": w.exists, "max_degree": w.max_degree if w.exists else None,
                             "tree_edges": [list(e) for e in w.tree_edges]}
        report["spanning_k_trees"] = trees
    else:
        report["spanning_k_trees"] = None

    certs: list[Certificate] = []
    for l in ls:
        if l >= lconn_k:
            certs.append(certify_l_connectivity(g, lconn_k, l, spec, kp, eps))
    certs += certificates_for(
        g, spec, kp,
        [TheoremId.TOUGH_ONE, TheoremId.BIPAR_TOUGH, TheoremId.TAU_FLOOR, TheoremId.BROUWER_CONJ], eps=eps,
    )
    for k in ks:
        if k >= 3:
            certs.append(certify_spanning_k_tree(g, k, spec, kp, eps))
    if d is not None and d >= 2:
        certs.append(certify_edge_connectivity(g, d, spec, eps))
    report["certificates"] = [certificate_json(c) for c in certs]

    if d is not None and is_connected(g) and g.n >= 2:
        report["bounds"] = {
            "toughness": jsonable(spectral_toughness_bounds(g, spec, kp).entries),
            "connectivity": jsonable(spectral_connectivity_bounds(g, spec).entries),
        }
    else:
        report["bounds"] = None
    return report


def render_pretty(obj: Any, indent: int = 0) -> str:
    """Plain-text rendering of a JSON-ready structure."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat_list(val):
                lines.append(f"{pad}{key}:")
                lines.append(render_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for i, val in enumerate(obj):
            if isinstance(val, (dict, list)) and val and not _flat_list(val):
                lines.append(f"{pad}- [{i}]")
                lines.append(render_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(val)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(lines)


def _flat_list(val) -> bool:
    return isinstance(val, list) and all(not isinstance(x, (dict, list)) for x in val)


def _scalar(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(x) for x in val) + "]"
    if val is None:
        return "-"
    return str(val)
