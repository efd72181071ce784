"""Spectral certificates for regular graphs.

Each certifier checks one theorem's hypotheses from the adjacency spectrum
and the edge connectivity alone, never from the exponential oracles, and
reports a ``Certificate``. Strict eigenvalue inequalities are decided with a
margin ``eps``: a value within ``eps`` of its threshold is Inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Optional

from .connectivity import edge_connectivity
from .graph import Graph, bipartition, is_complete, is_connected, is_regular
from .spectra import Spectrum, adjacency_spectrum, lambda_abs, theta

EPSILON = 1e-9


class TheoremId(str, Enum):
    L_CONN = "L_CONN"
    TOUGH_ONE = "TOUGH_ONE"
    BIPAR_TOUGH = "BIPAR_TOUGH"
    TAU_FLOOR = "TAU_FLOOR"
    BROUWER_CONJ = "BROUWER_CONJ"
    K_TREE = "K_TREE"
    EDGE_CONN_CIOABA = "EDGE_CONN_CIOABA"


class Status(str, Enum):
    CERTIFIED = "Certified"
    NOT_APPLICABLE = "NotApplicable"
    INCONCLUSIVE = "Inconclusive"
    HYPOTHESIS_FAILED = "HypothesisFailed"


# Formal hypothesis lists, kept with every certificate for auditing.
STATEMENTS = {
    TheoremId.L_CONN: "l >= k >= 2; G connected d-regular, d >= 3, n >= k+l-1; "
    "kappa' = d, or kappa' < d and lambda_ceil((l-k+1)d/(d-kappa')) < theta(d)  =>  kappa_l(G) >= k",
    TheoremId.TOUGH_ONE: "G connected d-regular, d >= 3; kappa' = d, or kappa' < d and "
    "lambda_ceil(d/(d-kappa')) < theta(d)  =>  t(G) >= 1",
    TheoremId.BIPAR_TOUGH: "G bipartite connected d-regular, kappa' < d; "
    "lambda_ceil(d/(d-kappa')) < d - (d-1)/(2d)  =>  t(G) = 1",
    TheoremId.TAU_FLOOR: "G connected d-regular  =>  t(G) >= kappa'/d",
    TheoremId.BROUWER_CONJ: "G connected d-regular, d >= 3, kappa' < d  =>  t(G) > d/lambda_2 - 1 >= d/lambda - 1",
    TheoremId.K_TREE: "k >= 3; G connected d-regular; l = d - (k-2)kappa'; l <= 0, or l > 0 and "
    "lambda_ceil(3d/l) < d - d/((k-2)(d+1))  =>  G has a spanning k-tree",
    TheoremId.EDGE_CONN_CIOABA: "d >= k >= 2; G d-regular; lambda_2 < d - 2(k-1)/(d+1)  =>  kappa'(G) >= k",
}


@dataclass
class Hypothesis:
    name: str
    value: Any
    relation: str
    threshold: Any
    ok: bool


@dataclass
class Certificate:
    theorem_id: TheoremId
    status: Status
    conclusion: str
    hypotheses: list = field(default_factory=list)
    index_used: Optional[int] = None
    lambda_at_index: Optional[float] = None
    threshold: Optional[float] = None
    epsilon: float = EPSILON
    params: dict = field(default_factory=dict)
    bound: Any = None
    note: str = ""

    @property
    def certified(self) -> bool:
        return self.status is Status.CERTIFIED

    @property
    def statement(self) -> str:
        return STATEMENTS[self.theorem_id]


def compare_below(value: float, threshold: float, eps: float = EPSILON) -> Status:
    """Decide ``value < threshold`` with margin: Certified, Inconclusive or HypothesisFailed."""
    if value < threshold - eps:
        return Status.CERTIFIED
    if abs(value - threshold) <= eps:
        return Status.INCONCLUSIVE
    return Status.HYPOTHESIS_FAILED


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class _Inputs:
    """Lazily computed spectrum, degree and edge connectivity of one graph."""

    def __init__(self, g: Graph, spectrum: Optional[Spectrum], kappa_prime: Optional[int]):
        self.g = g
        self._spectrum = spectrum
        self._kp = kappa_prime
        self.d = is_regular(g)
        self.connected = is_connected(g)

    @property
    def spectrum(self) -> Spectrum:
        if self._spectrum is None:
            self._spectrum = adjacency_spectrum(self.g)
        return self._spectrum

    @property
    def kappa_prime(self) -> int:
        if self._kp is None:
            self._kp = edge_connectivity(self.g)
        return self._kp


def _structural(inp: _Inputs, min_degree: Optional[int] = None, connected: bool = True) -> list:
    hyps = [Hypothesis("n", inp.g.n, ">=", 2, inp.g.n >= 2)]
    if connected:
        hyps.append(Hypothesis("connected", inp.connected, "==", True, inp.connected))
    hyps.append(Hypothesis("regular", inp.d is not None, "==", True, inp.d is not None))
    if min_degree is not None and inp.d is not None:
        hyps.append(Hypothesis("d", inp.d, ">=", min_degree, inp.d >= min_degree))
    return hyps


def _failed(hyps: list) -> bool:
    return not all(h.ok for h in hyps)


def _spectral_step(cert: Certificate, inp: _Inputs, idx: int, thr: float, eps: float) -> Certificate:
    """Shared tail: check lambda_idx < thr, or NotApplicable when idx > n."""
    cert.index_used = idx
    cert.threshold = thr
    n = inp.g.n
    if idx > n:
        cert.hypotheses.append(Hypothesis("index", idx, "<=", n, False))
        cert.status = Status.NOT_APPLICABLE
        cert.note = f"eigenvalue index {idx} exceeds n = {n}; the condition is not evaluated"
        return cert
    lam = inp.spectrum.values[idx - 1]
    cert.lambda_at_index = lam
    cert.status = compare_below(lam, thr, eps)
    cert.hypotheses.append(Hypothesis(f"lambda_{idx}", lam, "<", thr, cert.status is Status.CERTIFIED))
    if cert.status is Status.INCONCLUSIVE:
        cert.note = f"lambda_{idx} is within {eps:g} of the threshold"
    return cert


def certify_l_connectivity(
    g: Graph, k: int, l: int, spectrum: Optional[Spectrum] = None, kappa_prime: Optional[int] = None,
    eps: float = EPSILON,
) -> Certificate:
    if k < 2 or l < k:
        raise ValueError("need l >= k >= 2")
    inp = _Inputs(g, spectrum, kappa_prime)
    cert = Certificate(TheoremId.L_CONN, Status.HYPOTHESIS_FAILED, f"kappa_{l}(G) >= {k}",
                       epsilon=eps, params={"k": k, "l": l})
    cert.hypotheses = _structural(inp, min_degree=3)
    cert.hypotheses.append(Hypothesis("n", g.n, ">=", k + l - 1, g.n >= k + l - 1))
    if _failed(cert.hypotheses):
        return cert
    d, kp = inp.d, inp.kappa_prime
    if kp == d:
        cert.hypotheses.append(Hypothesis("kappa_prime", kp, "==", d, True))
        cert.status = Status.CERTIFIED
        return cert
    cert.hypotheses.append(Hypothesis("kappa_prime", kp, "<", d, True))
    return _spectral_step(cert, inp, ceil_div((l - k + 1) * d, d - kp), theta(d).value, eps)


def certify_toughness_one(
    g: Graph, spectrum: Optional[Spectrum] = None, kappa_prime: Optional[int] = None, eps: float = EPSILON
) -> Certificate:
    inp = _Inputs(g, spectrum, kappa_prime)
    cert = Certificate(TheoremId.TOUGH_ONE, Status.HYPOTHESIS_FAILED, "t(G) >= 1", epsilon=eps)
    cert.hypotheses = _structural(inp, min_degree=3)
    if _failed(cert.hypotheses):
        return cert
    d, kp = inp.d, inp.kappa_prime
    if kp == d:
        cert.hypotheses.append(Hypothesis("kappa_prime", kp, "==", d, True))
        cert.status = Status.CERTIFIED
        return cert
    cert.hypotheses.append(Hypothesis("kappa_prime", kp, "<", d, True))
    return _spectral_step(cert, inp, ceil_div(d, d - kp), theta(d).value, eps)


def certify_bipartite_toughness(
    g: Graph, spectrum: Optional[Spectrum] = None, kappa_prime: Optional[int] = None, eps: float = EPSILON
) -> Certificate:
    inp = _Inputs(g, spectrum, kappa_prime)
    cert = Certificate(TheoremId.BIPAR_TOUGH, Status.HYPOTHESIS_FAILED, "t(G) = 1", epsilon=eps)
    cert.hypotheses = _structural(inp)
    bip = bipartition(g) is not None
    cert.hypotheses.append(Hypothesis("bipartite", bip, "==", True, bip))
    if _failed(cert.hypotheses):
        return cert
    d, kp = inp.d, inp.kappa_prime
    if kp == d:
        cert.hypotheses.append(Hypothesis("kappa_prime", kp, "<", d, False))
        cert.status = Status.NOT_APPLICABLE
        cert.note = "requires kappa' < d"
        return cert
    cert.hypotheses.append(Hypothesis("kappa_prime", kp, "<", d, True))
    return _spectral_step(cert, inp, ceil_div(d, d - kp), d - (d - 1) / (2 * d), eps)


def toughness_floor(g: Graph, kappa_prime: Optional[int] = None) -> Certificate:
    inp = _Inputs(g, None, kappa_prime)
    cert = Certificate(TheoremId.TAU_FLOOR, Status.HYPOTHESIS_FAILED, "t(G) >= kappa'/d", epsilon=0.0)
    cert.hypotheses = _structural(inp, min_degree=1)
    if _failed(cert.hypotheses):
        return cert
    bound = Fraction(inp.kappa_prime, inp.d)
    cert.bound = bound
    cert.conclusion = f"t(G) >= {bound}"
    cert.status = Status.CERTIFIED
    return cert


def brouwer_conjecture_bound(
    g: Graph, spectrum: Optional[Spectrum] = None, kappa_prime: Optional[int] = None
) -> Certificate:
    inp = _Inputs(g, spectrum, kappa_prime)
    cert = Certificate(TheoremId.BROUWER_CONJ, Status.HYPOTHESIS_FAILED, "t(G) > d/lambda_2 - 1", epsilon=0.0)
    cert.hypotheses = _structural(inp, min_degree=3)
    if _failed(cert.hypotheses):
        return cert
    d, kp = inp.d, inp.kappa_prime
    if kp == d:
        cert.hypotheses.append(Hypothesis("kappa_prime", kp, "<", d, False))
        cert.status = Status.NOT_APPLICABLE
        cert.note = "the case kappa' = d is not covered"
        return cert
    cert.hypotheses.append(Hypothesis("kappa_prime", kp, "<", d, True))
    lam2 = inp.spectrum.values[1]
    cert.index_used = 2
    cert.lambda_at_index = lam2
    if lam2 <= 0:
        cert.status = Status.INCONCLUSIVE
        cert.note = "lambda_2 <= 0 contradicts kappa' < d; spectrum suspect"
        return cert
    cert.bound = d / lam2 - 1
    cert.conclusion = f"t(G) > {cert.bound:.12g}"
    cert.status = Status.CERTIFIED
    return cert


def certify_spanning_k_tree(
    g: Graph, k: int, spectrum: Optional[Spectrum] = None, kappa_prime: Optional[int] = None,
    eps: float = EPSILON,
) -> Certificate:
    if k < 3:
        raise ValueError("k must be at least 3")
    inp = _Inputs(g, spectrum, kappa_prime)
    cert = Certificate(TheoremId.K_TREE, Status.HYPOTHESIS_FAILED, f"G has a spanning {k}-tree",
                       epsilon=eps, params={"k": k})
    cert.hypotheses = _structural(inp, min_degree=1)
    if _failed(cert.hypotheses):
        return cert
    d, kp = inp.d, inp.kappa_prime
    slack = d - (k - 2) * kp
    cert.params["l"] = slack
    if slack <= 0:
        cert.hypotheses.append(Hypothesis("d-(k-2)kappa'", slack, "<=", 0, True))
        cert.status = Status.CERTIFIED
        return cert
    cert.hypotheses.append(Hypothesis("d-(k-2)kappa'", slack, ">", 0, True))
    thr = d - d / ((k - 2) * (d + 1))
    return _spectral_step(cert, inp, ceil_div(3 * d, slack), thr, eps)


def certify_edge_connectivity(
    g: Graph, k: int, spectrum: Optional[Spectrum] = None, eps: float = EPSILON
) -> Certificate:
    if k < 2:
        raise ValueError("k must be at least 2")
    inp = _Inputs(g, spectrum, None)
    cert = Certificate(TheoremId.EDGE_CONN_CIOABA, Status.HYPOTHESIS_FAILED, f"kappa'(G) >= {k}",
                       epsilon=eps, params={"k": k})
    cert.hypotheses = _structural(inp, connected=False)
    if inp.d is not None:
        cert.hypotheses.append(Hypothesis("d", inp.d, ">=", k, inp.d >= k))
    if _failed(cert.hypotheses):
        return cert
    d = inp.d
    return _spectral_step(cert, inp, 2, d - 2 * (k - 1) / (d + 1), eps)


# --- prior spectral bounds ---------------------------------------------------

@dataclass
class BoundsReport:
    kind: str
    entries: dict


def _require_regular_connected(g: Graph) -> int:
    d = is_regular(g)
    if d is None or not is_connected(g) or g.n < 2:
        raise ValueError("bounds need a connected regular graph with n >= 2")
    return d


def spectral_toughness_bounds(
    g: Graph, spectrum: Optional[Spectrum] = None, kappa_prime: Optional[int] = None
) -> BoundsReport:
    """Lower bounds and sufficient conditions on t(G) from the literature."""
    d = _require_regular_connected(g)
    spec = spectrum or adjacency_spectrum(g)
    kp = kappa_prime if kappa_prime is not None else edge_connectivity(g)
    lam = lambda_abs(spec)
    lam2 = spec.values[1]
    out = {}
    out["alon"] = {
        "value": (d * d / (d * lam + lam * lam) - 1) / 3 if lam > 0 else None,
        "relation": ">", "inputs": {"d": d, "lambda": lam},
    }
    out["brouwer"] = {"value": d / lam - 2 if lam > 0 else None, "relation": ">", "inputs": {"d": d, "lambda": lam}}
    lc = d - 1 + (3 if d % 2 == 0 else 2) / (d + 1)
    out["liu_chen"] = {"threshold": lc, "lambda_2": lam2, "implies_t_at_least_1": lam2 < lc - EPSILON}
    if d >= 3:
        th = theta(d).value
        out["cioaba_wong"] = {"threshold": th, "lambda_2": lam2, "implies_t_at_least_1": lam2 < th - EPSILON}
        # t >= tau for every tau <= kappa'/d with lambda_2 < d - tau d/(d+1)
        spectral_cap = (d - lam2) * (d + 1) / d
        floor = kp / d
        tau = min(floor, spectral_cap)
        out["cioaba_wong_tau"] = {
            "value": tau if tau > 0 else None,
            "attained": floor < spectral_cap,
            "relation": ">=",
            "inputs": {"d": d, "kappa_prime": kp, "lambda_2": lam2},
        }
    else:
        out["cioaba_wong"] = out["cioaba_wong_tau"] = None
    if d >= 3 and kp < d and lam2 > 0:
        out["brouwer_conj"] = {"value": d / lam2 - 1, "relation": ">", "inputs": {"d": d, "lambda_2": lam2}}
    else:
        out["brouwer_conj"] = None
    return BoundsReport("toughness", out)


def largest_cioaba_k(d: int, lam2: float, eps: float = EPSILON) -> Optional[int]:
    """Largest k with 2 <= k <= d and lambda_2 < d - 2(k-1)/(d+1), if any."""
    best = None
    for k in range(2, d + 1):
        if compare_below(lam2, d - 2 * (k - 1) / (d + 1), eps) is Status.CERTIFIED:
            best = k
    return best


def spectral_connectivity_bounds(g: Graph, spectrum: Optional[Spectrum] = None) -> BoundsReport:
    d = _require_regular_connected(g)
    spec = spectrum or adjacency_spectrum(g)
    lam2 = spec.values[1]
    lam = lambda_abs(spec)
    out = {
        # Fiedler's bound needs a noncomplete graph: K_n gives n against kappa = n-1
        "fiedler_kappa": {"value": d - lam2, "applies": not is_complete(g), "inputs": {"d": d, "lambda_2": lam2}},
        "ks_kappa": {"value": d - 36 * lam * lam / d if d else None, "inputs": {"d": d, "lambda": lam}},
        "cioaba_kappa_prime": {"value": largest_cioaba_k(d, lam2), "inputs": {"d": d, "lambda_2": lam2}},
    }
    return BoundsReport("connectivity", out)


# --- batch helpers -----------------------------------------------------------

ALL_THEOREMS = tuple(TheoremId)


def lconn_pairs(n: int) -> list[tuple[int, int]]:
    """Every (k, l) with 2 <= k <= l and k + l - 1 <= n."""
    return [(k, l) for k in range(2, n + 1) for l in range(k, n + 2 - k)]


def run_certifiers(
    g: Graph,
    theorems: Iterable[TheoremId] = ALL_THEOREMS,
    spectrum: Optional[Spectrum] = None,
    kappa_prime: Optional[int] = None,
    ktree_ks: Iterable[int] = (3, 4),
    lconn: Optional[Iterable[tuple[int, int]]] = None,
    edge_ks: Optional[Iterable[int]] = None,
    eps: float = EPSILON,
) -> list[Certificate]:
    """Every requested certificate for ``g``, sharing one spectrum and kappa'.

    ``lconn`` defaults to all admissible (k, l) pairs and ``edge_ks`` to
    2..d.
    """
    theorems = set(TheoremId(t) for t in theorems)
    spec = spectrum if spectrum is not None or g.n == 0 else adjacency_spectrum(g)
    d = is_regular(g)
    if kappa_prime is None and g.n >= 2:
        kappa_prime = edge_connectivity(g)
    out = []
    if TheoremId.L_CONN in theorems:
        for k, l in (lconn_pairs(g.n) if lconn is None else lconn):
            out.append(certify_l_connectivity(g, k, l, spec, kappa_prime, eps))
    if TheoremId.TOUGH_ONE in theorems:
        out.append(certify_toughness_one(g, spec, kappa_prime, eps))
    if TheoremId.BIPAR_TOUGH in theorems:
        out.append(certify_bipartite_toughness(g, spec, kappa_prime, eps))
    if TheoremId.TAU_FLOOR in theorems:
        out.append(toughness_floor(g, kappa_prime))
    if TheoremId.BROUWER_CONJ in theorems:
        out.append(brouwer_conjecture_bound(g, spec, kappa_prime))
    if TheoremId.K_TREE in theorems:
        for k in ktree_ks:
            out.append(certify_spanning_k_tree(g, k, spec, kappa_prime, eps))
    if TheoremId.EDGE_CONN_CIOABA in theorems:
        ks = edge_ks if edge_ks is not None else range(2, max(d or 0, 1) + 1)
        for k in ks:
            out.append(certify_edge_connectivity(g, k, spec, eps))
    return out


def theta_or_none(d: Optional[int]) -> Optional[float]:
    return theta(d).value if d is not None and d >= 3 else None
