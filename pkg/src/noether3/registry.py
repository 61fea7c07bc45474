"""Frozen lattice fixtures for the negative monomial cases.

Every matrix here is a hand transcription of a published display and is
never edited to make a test pass; a transcription error should show up as
a cohomology mismatch in the test suite.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import UnknownName
from .groups import LatticeAction, lattice_action
from .lattice import IntMatrix

Z = IntMatrix.zeros
I = IntMatrix.identity


def _m(rows) -> IntMatrix:
    return IntMatrix(rows)


def _block(*rows):
    return IntMatrix.from_blocks(rows)


# ----------------------------------------------------------------------
# R(a, b, ab): rank 6 and its rank 7 extension, Galois group C2 x C2

_S3_T1 = _m([
    [1, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0],
    [1, 0, 0, 0, -1, 1],
    [0, 0, 0, 1, 0, 0],
    [1, 0, 0, 1, -1, 0],
    [0, 0, 1, 1, -1, 0],
])
_S3_T2 = _m([
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [1, 0, -1, 0, 0, 1],
    [0, 0, -1, 0, 1, 0],
])
_S3_LABELS = ("y1", "y2", "y3", "y1-a", "y1+alpha*y3", "y3+alpha")


def _extend(m: IntMatrix, last_row) -> IntMatrix:
    rows = [list(r) + [0] for r in m.data]
    rows.append(list(last_row) + [1])
    return IntMatrix(rows)


def _s3_M():
    return lattice_action([_S3_T1, _S3_T2], ["t1", "t2"], _S3_LABELS, "paper.s3.M")


def _s3_Mp():
    return lattice_action(
        [_extend(_S3_T1, [1, 0, 0, 1, -2, 0]), _extend(_S3_T2, [1, 0, -2, 0, 0, 0])],
        ["t1", "t2"],
        _S3_LABELS + ("y3^2+2alpha*y3+y1",),
        "paper.s3.Mp",
    )


# ----------------------------------------------------------------------
# group (3,1,2,1): ranks 4, 10, 12, Galois group C2^3

_S5_M = [
    _m([[1, 0, 0, 0], [1, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
    _m([[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, -1, 0], [0, 0, 0, 1]]),
    _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, -1]]),
]
_S5_A = [
    _m([[0, -1, 0, 0], [1, -1, 0, 0]]),
    _m([[0, 0, -1, 0], [1, 0, -1, 0]]),
    _m([[0, 0, 0, -1], [1, 0, 0, -1]]),
]
_C = _m([[0, 1], [1, 0]])


def _s5_mp(i: int) -> IntMatrix:
    """Rank 10 matrix of the i-th generator: pairs (y4,y5), (y6,y7), (y8,y9)."""
    # pair k involves generators {1,2}, {1,3}, {2,3} respectively
    pairs = [(0, 1), (0, 2), (1, 2)]
    top = _block([_S5_M[i], Z(4, 6)])
    rows = [top]
    for k, pair in enumerate(pairs):
        left = _S5_A[i] if i in pair else Z(2, 4)
        mid = [Z(2, 2)] * 3
        mid[k] = _C if i in pair else I(2)
        rows.append(_block([left, *mid]))
    return _block(*[[r] for r in rows])


def _s5_mpp(i: int) -> IntMatrix:
    return _block([_s5_mp(i), Z(10, 2)], [_S5_A[i], Z(2, 6), _C])


_S5_LABELS = ("y0", "y1", "y2", "y3")
_S5_LABELS_P = _S5_LABELS + ("y4", "y5", "y6", "y7", "y8", "y9")
_S5_LABELS_PP = _S5_LABELS_P + ("y10", "y11")
_T3 = ["t1", "t2", "t3"]


def _s5_M():
    return lattice_action(_S5_M, _T3, _S5_LABELS, "paper.s5.M")


def _s5_Mp():
    return lattice_action([_s5_mp(i) for i in range(3)], _T3, _S5_LABELS_P, "paper.s5.Mp")


def _s5_Mpp():
    return lattice_action([_s5_mpp(i) for i in range(3)], _T3, _S5_LABELS_PP, "paper.s5.Mpp")


# ----------------------------------------------------------------------
# group (3,3,1,1), cases (A)/(B): rank 8 and its rank 10 extension

_B = {
    1: _m([[1, 0], [0, 1], [1, 1]]),
    2: _m([[0, 0], [0, 1], [0, 1]]),
    3: _m([[1, 0], [0, 0], [1, 0]]),
}
_CC = {
    1: _m([[0, 1, -1], [1, 0, -1], [0, 0, -1]]),
    2: _m([[0, -1, 1], [0, -1, 0], [1, -1, 0]]),
    3: _m([[-1, 0, 0], [-1, 0, 1], [-1, 1, 0]]),
}


def _s8_matrix(first: int, second: int) -> IntMatrix:
    return _block(
        [I(2), Z(2, 3), Z(2, 3)],
        [_B[first], _CC[first], Z(3, 3)],
        [_B[second], Z(3, 3), _CC[second]],
    )


# (generator t1, generator t2, product t1t2) as block indices
S8_CASE_B = {"t1": (1, 2), "t2": (2, 3), "t1t2": (3, 1)}
S8_CASE_A = {"t1": (2, 1), "t2": (3, 2), "t1t2": (1, 3)}

_S8_F = {
    "t1": _m([[1, 1, 0, 0, -2, 0, 0, 0], [0, 1, 0, 0, 0, 0, -2, 0]]),
    "t2": _m([[0, 1, 0, -2, 0, 0, 0, 0], [1, 0, 0, 0, 0, -2, 0, 0]]),
    "t1t2": _m([[1, 0, -2, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0, 0, -2]]),
}
_S8_LABELS = ("z1", "z1-1", "z2", "z2-1", "z2-z1", "z3", "z3-1", "z3-z1")


def s8_displayed(case: str = "B") -> dict[str, IntMatrix]:
    """The three displayed rank 8 matrices for case (A) or (B)."""
    table = S8_CASE_B if case == "B" else S8_CASE_A
    return {k: _s8_matrix(*v) for k, v in table.items()}


def s8p_displayed() -> dict[str, IntMatrix]:
    m = s8_displayed("B")
    return {k: _block([m[k], Z(8, 2)], [_S8_F[k], I(2)]) for k in m}


def _s8_M():
    m = s8_displayed("B")
    return lattice_action([m["t1"], m["t2"]], ["t1", "t2"], _S8_LABELS, "paper.s8.M")


def _s8_M_caseA():
    m = s8_displayed("A")
    return lattice_action([m["t1"], m["t2"]], ["t1", "t2"], _S8_LABELS, "paper.s8.M.caseA")


def _s8_Mp():
    m = s8p_displayed()
    return lattice_action(
        [m["t1"], m["t2"]],
        ["t1", "t2"],
        _S8_LABELS + ("(z2-1)^2+z1-1", "z3^2-z1"),
        "paper.s8.Mp",
    )


# ----------------------------------------------------------------------
# R1(a, b, c): rank 11 and rank 12, Galois group C2^3

_S12_A = {
    1: [[1, 0, 0, 0], [1, 0, 1, 0], [0, 0, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0], [1, 0, 1, 0], [0, 0, 1, 0]],
    2: [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1]],
    3: [[1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
}
_S12_B = {
    1: [
        [0, -1, 0, 1, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 1, 0],
        [1, -1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 1],
        [0, -1, 1, 0, 0, 0, 0],
        [0, -1, 0, 0, 1, 0, 0],
    ],
    2: [
        [0, 0, -1, 0, 1, 0, 0],
        [0, 0, -1, 0, 0, 1, 0],
        [0, 0, -1, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 1],
        [1, 0, -1, 0, 0, 0, 0],
        [0, 1, -1, 0, 0, 0, 0],
        [0, 0, -1, 1, 0, 0, 0],
    ],
    3: [
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 1, 0, 0],
        [-1, 1, 0, 0, 0, 0, 0],
        [-1, 0, 1, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 1],
        [-1, 0, 0, 0, 0, 1, 0],
    ],
}
_S12_C = {
    1: [1, 0, 1, 0, 0, -2, 0, 0, 0, 0, 0],
    2: [0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0],
    3: [1, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0],
}
_S12_LABELS = (
    "u", "v", "u-a", "v^2-bu", "w", "alpha*w+u", "beta*w+v", "w+alpha",
    "vw+beta*u", "beta*u(w+alpha)+v(alpha*w+u)", "vw+beta*u+alpha(beta*w+v)",
)


def _s12_m(i: int) -> IntMatrix:
    return _block([I(4), Z(4, 7)], [_m(_S12_A[i]), _m(_S12_B[i])])


def _s12_M():
    return lattice_action([_s12_m(i) for i in (1, 2, 3)], _T3, _S12_LABELS, "paper.s12.M")


def _s12_Mp():
    return lattice_action(
        [_extend(_s12_m(i), _S12_C[i]) for i in (1, 2, 3)],
        _T3,
        _S12_LABELS + ("w^2-u",),
        "paper.s12.Mp",
    )


# ----------------------------------------------------------------------

_BUILDERS = {
    "paper.s3.M": _s3_M,
    "paper.s3.Mp": _s3_Mp,
    "paper.s5.M": _s5_M,
    "paper.s5.Mp": _s5_Mp,
    "paper.s5.Mpp": _s5_Mpp,
    "paper.s8.M": _s8_M,
    "paper.s8.M.caseA": _s8_M_caseA,
    "paper.s8.Mp": _s8_Mp,
    "paper.s12.M": _s12_M,
    "paper.s12.Mp": _s12_Mp,
}

DESCRIPTIONS = {
    "paper.s3.M": "R(a,b,ab) lattice, C2xC2 Galois action",
    "paper.s3.Mp": "R(a,b,ab) lattice with a trivializing seventh generator",
    "paper.s5.M": "group (3,1,2,1) lattice, C2^3 Galois action",
    "paper.s5.Mp": "group (3,1,2,1) rank 10 extension",
    "paper.s5.Mpp": "group (3,1,2,1) rank 12 extension, H1 = 0 on all subgroups",
    "paper.s8.M": "group (3,3,1,1) case (B) lattice, C2xC2 Galois action",
    "paper.s8.M.caseA": "group (3,3,1,1) case (A) lattice",
    "paper.s8.Mp": "group (3,3,1,1) case (B) rank 10 extension",
    "paper.s12.M": "R1(a,b,c) lattice, C2^3 Galois action",
    "paper.s12.Mp": "R1(a,b,c) lattice with w^2-u adjoined",
}


def names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def paper_module(name: str) -> LatticeAction:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownName(f"unknown registry module {name!r}") from None
    return builder()
