from fractions import Fraction

import pytest

from regspec import sweep
from regspec.certifiers import Certificate, Status, TheoremId
from regspec.constructions import FamilySpec, cycle, gadget_4regular, petersen
from regspec.graph import to_graph6
from regspec.sweep import Oracles, SizeGuardError, check_certificate, examine, run_sweep, valid_k_tree
from regspec.toughness import KTreeWitness


def fake(tid, **kw):
    return Certificate(tid, Status.CERTIFIED, "forced", **kw)


def test_check_certificate_flags_false_claims():
    o = Oracles(gadget_4regular())
    assert check_certificate(fake(TheoremId.TOUGH_ONE), o) == "t = 1/2 < 1"
    assert check_certificate(fake(TheoremId.BIPAR_TOUGH), o) is not None
    assert check_certificate(fake(TheoremId.TAU_FLOOR, bound=Fraction(1, 2)), o) is None
    assert check_certificate(fake(TheoremId.TAU_FLOOR, bound=Fraction(3, 4)), o) is not None
    assert check_certificate(fake(TheoremId.BROUWER_CONJ, bound=0.5), o) is not None  # not strict
    assert check_certificate(fake(TheoremId.L_CONN, params={"k": 2, "l": 2}), o) == "kappa_2 = 1 < 2"
    assert check_certificate(fake(TheoremId.EDGE_CONN_CIOABA, params={"k": 3}), o) == "kappa' = 2 < 3"
    assert check_certificate(fake(TheoremId.K_TREE, params={"k": 3}), o) is None
    assert check_certificate(fake(TheoremId.K_TREE, params={"k": 2}), Oracles(petersen())) is None
    # statuses other than Certified are never checked
    skipped = Certificate(TheoremId.TOUGH_ONE, Status.INCONCLUSIVE, "")
    assert check_certificate(skipped, o) is None


def test_valid_k_tree_rejects_bad_witnesses():
    g = cycle(5)
    good = KTreeWitness(True, ((0, 1), (1, 2), (2, 3), (3, 4)), 2)
    assert valid_k_tree(g, good, 2)
    assert not valid_k_tree(g, KTreeWitness(True, ((0, 1), (1, 2), (2, 3), (0, 2)), 2), 2)
    assert not valid_k_tree(g, KTreeWitness(True, ((0, 1), (1, 2), (2, 3), (3, 4)), 3), 2)
    assert not valid_k_tree(g, good, 1)


def test_examine_reports_statuses():
    statuses, bad = examine(to_graph6(gadget_4regular()), (TheoremId.TOUGH_ONE, TheoremId.K_TREE), (3,))
    assert statuses == [("TOUGH_ONE", "Inconclusive"), ("K_TREE", "Certified")]
    assert bad == []


def test_small_exhaustive_sweep():
    rep = run_sweep(FamilySpec("exhaustive_regular", n=[4, 6], d=3))
    assert rep.ok
    assert rep.graphs_examined == 71
    assert sum(rep.counts["TOUGH_ONE"].values()) == 71
    assert rep.family["kind"] == "exhaustive_regular"


def test_parallel_sweep_matches_serial():
    fam = FamilySpec("random_regular", n=[8, 10], d=[3, 4], count=40, seed=3, connected=True)
    a = run_sweep(fam, workers=1)
    b = run_sweep(fam, workers=2)
    assert a.counts == b.counts
    assert a.violations == b.violations == []


def test_size_guard():
    with pytest.raises(SizeGuardError):
        run_sweep([cycle(20)])
    assert run_sweep([cycle(20)], theorems=[TheoremId.TAU_FLOOR], max_n=None).ok


def test_violations_are_collected_and_sorted(monkeypatch):
    def broken(g, theorems, **kw):
        return [fake(TheoremId.TOUGH_ONE), fake(TheoremId.L_CONN, params={"k": 2, "l": 2})]

    monkeypatch.setattr(sweep, "run_certifiers", broken)
    rep = run_sweep([gadget_4regular(), petersen()])
    assert not rep.ok
    assert [v["theorem_id"] for v in rep.violations] == ["L_CONN", "TOUGH_ONE"]
    assert rep.violations[0]["graph6"] == to_graph6(gadget_4regular())
