"""End-to-end negativity certificates built from the registry fixtures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .cohomology import TestOutcome, nonvanishing_test
from .errors import CertificationFailed, UnknownCase
from .parity import parity_test_refined, parity_test_simple
from .registry import paper_module


@dataclass(frozen=True)
class ChainCase:
    module: str
    test: str
    claim: str
    run: Callable[[], TestOutcome]


def _nonvanishing(name: str):
    return lambda: nonvanishing_test(paper_module(name))


CASES: dict[str, ChainCase] = {
    "R.deg4.abcSquare": ChainCase(
        "paper.s3.Mp",
        "nonvanishing",
        "R(a,b,c) is negative when abc is a square and the degree is 4",
        _nonvanishing("paper.s3.Mp"),
    ),
    "N3121.deg8": ChainCase(
        "paper.s5.Mpp",
        "parity-simple",
        "group (3,1,2,1) is negative in degree 8",
        lambda: parity_test_simple(paper_module("paper.s5.Mpp"), "y0"),
    ),
    "N3311.caseAB": ChainCase(
        "paper.s8.Mp",
        "nonvanishing",
        "group (3,3,1,1) with all signs -1 is negative in its generic case",
        _nonvanishing("paper.s8.Mp"),
    ),
    "R1.deg8": ChainCase(
        "paper.s12.Mp",
        "parity-refined",
        "R1(a,b,c) is negative in degree 8",
        lambda: parity_test_refined(paper_module("paper.s12.Mp"), "u", "t3", "w"),
    ),
}


@dataclass(frozen=True)
class Certificate:
    case: str
    module: str
    claim: str
    outcome: TestOutcome

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "module": self.module,
            "claim": self.claim,
            **self.outcome.to_json(),
        }


def certify_negativity(case_id: str) -> Certificate:
    """Run a registered chain; raise rather than return anything unproven."""
    try:
        case = CASES[case_id]
    except KeyError:
        raise UnknownCase(f"unknown certification case {case_id!r}; known: {', '.join(CASES)}") from None
    out = case.run()
    if not out.certified:
        raise CertificationFailed(f"{case_id}: {case.test} on {case.module} was inconclusive: {out.reason}")
    return Certificate(case_id, case.module, case.claim, out)
