import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_bipartite_regular
from regspec.certifiers import (
    ALL_THEOREMS,
    EPSILON,
    Status,
    TheoremId,
    brouwer_conjecture_bound,
    ceil_div,
    certify_bipartite_toughness,
    certify_edge_connectivity,
    certify_l_connectivity,
    certify_spanning_k_tree,
    certify_toughness_one,
    compare_below,
    largest_cioaba_k,
    lconn_pairs,
    run_certifiers,
    spectral_connectivity_bounds,
    spectral_toughness_bounds,
    toughness_floor,
)
from regspec.connectivity import edge_connectivity, vertex_connectivity
from regspec.constructions import complete, petersen, random_regular
from regspec.graph import disjoint_union, from_edge_list, is_connected
from regspec.spectra import adjacency_spectrum, theta
from regspec.sweep import Oracles, check_certificate
from regspec.toughness import toughness_exact

SQRT7 = math.sqrt(7)


def connected_regular(seed, n_choices=(8, 10, 12), d_choices=(3, 4, 5)):
    rng = random.Random(seed)
    while True:
        n, d = rng.choice(n_choices), rng.choice(d_choices)
        if n * d % 2:
            continue
        g = random_regular(n, d, rng.randrange(2**32))
        if is_connected(g):
            return g


def test_compare_below_margin():
    assert compare_below(1.0, 2.0) is Status.CERTIFIED
    assert compare_below(2.0, 2.0) is Status.INCONCLUSIVE
    assert compare_below(2.0 - EPSILON / 2, 2.0) is Status.INCONCLUSIVE
    assert compare_below(2.0 + EPSILON / 2, 2.0) is Status.INCONCLUSIVE
    assert compare_below(2.1, 2.0) is Status.HYPOTHESIS_FAILED
    assert ceil_div(12, 2) == 6 and ceil_div(7, 2) == 4


# --- L_CONN -----------------------------------------------------------------

def test_l_conn_petersen_edge_branch(named_graphs):
    c = certify_l_connectivity(named_graphs["petersen"], 2, 2)
    assert c.status is Status.CERTIFIED
    assert c.index_used is None
    assert c.conclusion == "kappa_2(G) >= 2"


def test_l_conn_gadget_sits_on_threshold(named_graphs):
    c = certify_l_connectivity(named_graphs["gadget"], 2, 2)
    assert c.status is Status.INCONCLUSIVE
    assert c.index_used == 2
    assert abs(c.lambda_at_index - (1 + SQRT7)) <= 1e-9
    assert c.threshold == pytest.approx(theta(4).value, abs=1e-15)
    assert "within" in c.note


def test_l_conn_preconditions(named_graphs):
    c = certify_l_connectivity(named_graphs["c6"], 2, 3)
    assert c.status is Status.HYPOTHESIS_FAILED
    assert [h.name for h in c.hypotheses if not h.ok] == ["d"]
    irregular = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert certify_l_connectivity(irregular, 2, 2).status is Status.HYPOTHESIS_FAILED
    two = disjoint_union(complete(4), complete(4))
    failed = [h.name for h in certify_l_connectivity(two, 2, 2).hypotheses if not h.ok]
    assert failed == ["connected"]
    # n >= k + l - 1
    assert certify_l_connectivity(complete(4), 2, 4).status is Status.HYPOTHESIS_FAILED
    for k, l in [(1, 2), (3, 2)]:
        with pytest.raises(ValueError):
            certify_l_connectivity(petersen(), k, l)


def test_index_beyond_n_is_not_applicable(named_graphs):
    g = named_graphs["gadget"]  # d = 4, kappa' = 2
    c = certify_l_connectivity(g, 2, 6)  # idx = ceil(5*4/2) = 10 <= 11
    assert c.index_used == 10 and c.status is not Status.NOT_APPLICABLE
    c = certify_l_connectivity(g, 2, 7)  # idx = 12 > 11
    assert c.index_used == 12
    assert c.status is Status.NOT_APPLICABLE
    assert c.lambda_at_index is None


def test_lconn_pairs():
    assert lconn_pairs(3) == [(2, 2)]
    assert (2, 5) in lconn_pairs(6) and (3, 4) in lconn_pairs(6)
    assert all(k + l - 1 <= 6 for k, l in lconn_pairs(6))


# --- TOUGH_ONE --------------------------------------------------------------

def test_tough_one_examples(named_graphs):
    assert certify_toughness_one(named_graphs["petersen"]).status is Status.CERTIFIED
    assert certify_toughness_one(named_graphs["k4"]).status is Status.CERTIFIED
    assert certify_toughness_one(named_graphs["q3"]).status is Status.CERTIFIED
    c = certify_toughness_one(named_graphs["gadget"])
    assert c.status is Status.INCONCLUSIVE
    assert c.index_used == 2
    assert toughness_exact(named_graphs["gadget"]).value == Fraction(1, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_lambda_2_below_theta_forces_tough_one(seed):
    g = connected_regular(seed)
    sp = adjacency_spectrum(g)
    d = round(sp.values[0])
    kp = edge_connectivity(g)
    c = certify_toughness_one(g, sp, kp)
    if kp < d:
        assert c.index_used >= 2
    if sp.values[1] < theta(d).value - EPSILON:
        assert c.status is Status.CERTIFIED


# --- BIPAR_TOUGH ------------------------------------------------------------

def test_bipartite_examples(named_graphs):
    g = named_graphs["k33e_pair"]
    assert edge_connectivity(g) == 2
    c = certify_bipartite_toughness(g)
    assert c.index_used == 3
    assert c.threshold == pytest.approx(8 / 3, abs=1e-15)
    assert c.status is Status.CERTIFIED
    assert toughness_exact(g).value == 1
    assert certify_bipartite_toughness(named_graphs["k33"]).status is Status.NOT_APPLICABLE
    c = certify_bipartite_toughness(named_graphs["petersen"])
    assert c.status is Status.HYPOTHESIS_FAILED
    assert [h.name for h in c.hypotheses if not h.ok] == ["bipartite"]


# --- TAU_FLOOR / BROUWER_CONJ ----------------------------------------------

def test_tau_floor_examples(named_graphs):
    c = toughness_floor(named_graphs["gadget"])
    assert c.certified and c.bound == Fraction(1, 2)
    assert toughness_exact(named_graphs["gadget"]).value == c.bound
    assert toughness_floor(named_graphs["petersen"]).bound == 1
    assert toughness_floor(named_graphs["c6"]).bound == 1
    assert toughness_floor(from_edge_list(4, [(0, 1), (2, 3)])).status is Status.HYPOTHESIS_FAILED


def test_brouwer_conjecture_examples(named_graphs):
    c = brouwer_conjecture_bound(named_graphs["gadget"])
    assert c.certified
    assert c.bound == pytest.approx(4 / (1 + SQRT7) - 1, abs=1e-12)
    assert c.bound == pytest.approx(0.0971675, abs=1e-7)
    assert brouwer_conjecture_bound(named_graphs["petersen"]).status is Status.NOT_APPLICABLE
    pair = named_graphs["k33e_pair"]
    c = brouwer_conjecture_bound(pair)
    lam2 = adjacency_spectrum(pair).values[1]
    assert c.bound == pytest.approx(3 / lam2 - 1, abs=1e-12)
    assert toughness_exact(pair).value > Fraction(c.bound)


# --- K_TREE -----------------------------------------------------------------

def test_k_tree_examples(named_graphs):
    c = certify_spanning_k_tree(named_graphs["petersen"], 3)
    assert c.certified and c.params["l"] == 0
    assert certify_spanning_k_tree(named_graphs["k4"], 3).certified
    c = certify_spanning_k_tree(named_graphs["gadget"], 3)
    assert c.params["l"] == 2
    assert c.index_used == 6
    assert c.threshold == pytest.approx(3.2, abs=1e-15)
    assert c.lambda_at_index == pytest.approx(-1, abs=1e-9)
    assert c.certified
    with pytest.raises(ValueError):
        certify_spanning_k_tree(petersen(), 2)


# --- EDGE_CONN_CIOABA --------------------------------------------------------

def test_edge_connectivity_certificate(named_graphs):
    c = certify_edge_connectivity(named_graphs["petersen"], 3)
    assert c.certified
    assert c.threshold == pytest.approx(2.0)
    assert certify_edge_connectivity(named_graphs["petersen"], 4).status is Status.HYPOTHESIS_FAILED
    # gadget: lambda_2 = 3.6457... vs 4 - 2/5 = 3.6
    assert certify_edge_connectivity(named_graphs["gadget"], 2).status is Status.HYPOTHESIS_FAILED


# --- batch, stability, soundness on small random families ---------------------

def test_run_certifiers_covers_every_theorem(named_graphs):
    certs = run_certifiers(named_graphs["petersen"])
    assert {c.theorem_id for c in certs} == set(ALL_THEOREMS)
    assert len([c for c in certs if c.theorem_id is TheoremId.K_TREE]) == 2
    assert all(c.statement for c in certs)


def test_certified_means_every_hypothesis_ok(named_graphs):
    for g in named_graphs.values():
        for c in run_certifiers(g):
            if c.certified:
                assert all(h.ok for h in c.hypotheses)
            if c.status is Status.INCONCLUSIVE and c.lambda_at_index is not None:
                assert abs(c.lambda_at_index - c.threshold) <= c.epsilon


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_halving_epsilon_never_flips_certified_to_failed(seed):
    g = connected_regular(seed)
    sp = adjacency_spectrum(g)
    kp = edge_connectivity(g)
    full = run_certifiers(g, spectrum=sp, kappa_prime=kp)
    half = run_certifiers(g, spectrum=sp, kappa_prime=kp, eps=EPSILON / 2)
    for a, b in zip(full, half):
        assert a.theorem_id is b.theorem_id and a.params == b.params
        if a.certified:
            assert b.certified


@pytest.mark.parametrize("seed", range(6))
def test_random_bipartite_certificates_are_sound(seed):
    g = random_bipartite_regular(6, 3, random.Random(seed))
    if not is_connected(g):
        pytest.skip("disconnected draw")
    oracles = Oracles(g)
    for c in run_certifiers(g):
        assert check_certificate(c, oracles) is None
    assert toughness_exact(g).value <= 1


# --- prior bounds -----------------------------------------------------------

def test_toughness_bounds_examples(named_graphs):
    e = spectral_toughness_bounds(named_graphs["petersen"]).entries
    assert e["alon"]["value"] == pytest.approx(-1 / 30, abs=1e-12)
    assert e["brouwer"]["value"] == pytest.approx(-0.5, abs=1e-12)
    assert e["alon"]["inputs"] == {"d": 3, "lambda": pytest.approx(2)}
    assert e["brouwer_conj"] is None
    e = spectral_toughness_bounds(named_graphs["gadget"]).entries
    assert e["brouwer"]["value"] == pytest.approx(4 / (1 + SQRT7) - 2, abs=1e-12)
    assert e["brouwer"]["value"] < 0
    e = spectral_toughness_bounds(named_graphs["k33"]).entries
    assert e["liu_chen"]["threshold"] == pytest.approx(2.5)
    assert e["liu_chen"]["implies_t_at_least_1"]
    with pytest.raises(ValueError):
        spectral_toughness_bounds(from_edge_list(2, []))


def test_connectivity_bounds_examples(named_graphs):
    e = spectral_connectivity_bounds(named_graphs["petersen"]).entries
    assert e["fiedler_kappa"]["value"] == pytest.approx(2)
    assert e["cioaba_kappa_prime"]["value"] == 3
    e = spectral_connectivity_bounds(named_graphs["gadget"]).entries
    assert e["fiedler_kappa"]["value"] == pytest.approx(3 - SQRT7, abs=1e-9)
    e = spectral_connectivity_bounds(named_graphs["k33"]).entries
    assert e["fiedler_kappa"]["value"] == pytest.approx(3, abs=1e-9)
    assert largest_cioaba_k(3, 3.0) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_bounds_never_exceed_exact_values(seed):
    g = connected_regular(seed, n_choices=(8, 10))
    t = toughness_exact(g)
    kappa, kp = vertex_connectivity(g), edge_connectivity(g)
    conn = spectral_connectivity_bounds(g).entries
    assert conn["fiedler_kappa"]["value"] <= kappa + 1e-9
    ck = conn["cioaba_kappa_prime"]["value"]
    assert ck is None or ck <= kp
    tb = spectral_toughness_bounds(g, kappa_prime=kp).entries
    for key in ("alon", "brouwer", "brouwer_conj", "cioaba_wong_tau"):
        entry = tb[key]
        if entry is None or entry["value"] is None or t.infinite:
            continue
        # float bound against the exact rational, nudged up by a hair
        assert Fraction(entry["value"]) <= t.value + Fraction(1, 10**9)
    for key in ("liu_chen", "cioaba_wong"):
        if tb[key]["implies_t_at_least_1"]:
            assert t.at_least(1)


def test_fiedler_entry_flags_complete_graphs():
    e = spectral_connectivity_bounds(complete(5)).entries["fiedler_kappa"]
    assert e["value"] == pytest.approx(5) and not e["applies"]
    assert spectral_connectivity_bounds(petersen()).entries["fiedler_kappa"]["applies"]
