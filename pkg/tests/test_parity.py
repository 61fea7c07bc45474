import copy
import random

import pytest

from noether3.certify import CASES, certify_negativity
from noether3.errors import CertificationFailed, NotElementaryAbelian2Group, UnknownCase
from noether3.groups import lattice_action
from noether3.lattice import IntMatrix
from noether3.parity import (
    find_flip,
    invariant_sublattice,
    norm_sum,
    parity_test_refined,
    parity_test_simple,
    replay_certificate,
)
from noether3.registry import paper_module
from oracles import permutation_module


def test_invariant_sublattice_of_a_swap():
    L = lattice_action([[[0, 1], [1, 0]]])
    assert invariant_sublattice(L) == IntMatrix([[1, 1]])
    assert invariant_sublattice(L, L.group.subgroup([])).rows == 2


def test_simple_certificate_replays_and_detects_tampering():
    out = parity_test_simple(paper_module("paper.s5.Mpp"), "y0")
    assert out.certified
    cert = out.evidence["certificate"]
    assert replay_certificate(cert)
    bad = copy.deepcopy(cert)
    bad["evidence"]["matrices"]["t1"][0][1] = "1"
    assert not replay_certificate(bad)


def test_refined_certificate_replays_and_detects_tampering():
    out = parity_test_refined(paper_module("paper.s12.Mp"), "u", "t3", "w")
    assert out.certified
    cert = out.evidence["certificate"]
    assert replay_certificate(cert)
    dropped = copy.deepcopy(cert)
    dropped["evidence"]["witnesses"].pop()
    assert not replay_certificate(dropped)
    inv = next(i for i, w in enumerate(cert["evidence"]["witnesses"]) if w["mode"] == "invariants")
    # e1 + e2 instead of e1 is a change of basis and must still replay
    rebased = copy.deepcopy(cert)
    rebased["evidence"]["witnesses"][inv]["invariant_basis"][0][1] = "1"
    assert replay_certificate(rebased)
    # 2 e1 spans a proper sublattice, so the evenness check would be incomplete
    shrunk = copy.deepcopy(cert)
    shrunk["evidence"]["witnesses"][inv]["invariant_basis"][0][0] = "2"
    assert not replay_certificate(shrunk)
    short = copy.deepcopy(cert)
    short["evidence"]["witnesses"][inv]["invariant_basis"].pop()
    assert not replay_certificate(short)


def test_flip_detection():
    L = paper_module("paper.s12.Mp")
    assert find_flip(L, L.group.element("t3"), 0) == 4


def test_simple_test_reports_first_obstruction():
    out = parity_test_simple(paper_module("paper.s5.M"), 0)
    assert not out.certified and out.reason.startswith("H1(")


def test_refined_requires_exponent_two():
    L = lattice_action([[[0, 1], [-1, 0]]], names=["s"])
    with pytest.raises(NotElementaryAbelian2Group):
        parity_test_refined(L, 0, "s", 1)


@pytest.mark.parametrize("seed", range(15))
def test_parity_tests_never_certify_permutation_modules(seed):
    rng = random.Random(seed)
    L = lattice_action(permutation_module(rng.choice([2, 3]), rng))
    assert not any(norm_sum(L)[i, i] < 0 for i in range(L.rank))
    for u in range(L.rank):
        assert not parity_test_simple(L, u).certified
        assert not parity_test_refined(L, u, "t1", (u + 1) % L.rank).certified


def test_certificates():
    for case in CASES:
        cert = certify_negativity(case)
        assert cert.outcome.certified and cert.to_json()["status"] == "certified"
    with pytest.raises(UnknownCase):
        certify_negativity("nope")


def test_certify_refuses_to_fabricate(monkeypatch):
    import noether3.certify as mod

    case = mod.CASES["R1.deg8"]
    broken = mod.ChainCase(case.module, case.test, case.claim, lambda: parity_test_simple(paper_module("paper.s12.M"), "u"))
    monkeypatch.setitem(mod.CASES, "R1.deg8", broken)
    with pytest.raises(CertificationFailed):
        certify_negativity("R1.deg8")
