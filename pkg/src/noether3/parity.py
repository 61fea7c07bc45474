"""Mod-2 obstructions to a lattice being a summand of a permutation module.

Two certificate schemata are implemented.  ``parity_test_simple`` shows
that the invariant generator ``u`` would map into ``2M`` under any
splitting, using an even norm sum and a flip for every group element.
``parity_test_refined`` replaces the norm-sum argument with a case split
over hyperplanes avoiding a single flipping element.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from .cohomology import TestOutcome, h1, norm_matrix
from .errors import NotElementaryAbelian2Group
from .groups import FiniteMatrixGroup, LatticeAction, all_subgroups, restrict_action
from .lattice import IntMatrix, kernel_basis


def norm_sum(L: LatticeAction) -> IntMatrix:
    """Entrywise sum of the action matrices over the whole group."""
    return norm_matrix(L)


def invariant_sublattice(L: LatticeAction, H: FiniteMatrixGroup | None = None) -> IntMatrix:
    """Saturated basis of the vectors fixed by every element of ``H``."""
    if H is None:
        H = L.group
    restrict_action(L, H)
    n = L.rank
    if H.order == 1:
        return IntMatrix.identity(n)
    cols = []
    for h in H.elements[1:]:
        d = h - IntMatrix.identity(n)
        cols.extend(d.column(j) for j in range(n))
    return kernel_basis(IntMatrix([list(x) for x in zip(*cols)], cols=len(cols)))


@dataclass
class ParityCertificate:
    kind: str  # "simple" or "refined"
    invariant_index: int
    flip_data: dict
    evidence: dict
    subgroup_h1_checks: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def _h1_checks(L: LatticeAction):
    """All-subgroup H^1 table; returns (rows, first failing label or None)."""
    rows = []
    for H in all_subgroups(L.group):
        res = h1(restrict_action(L, H))
        rows.append({"subgroup": H.label, **res.structure.to_json()})
        if not res.is_zero:
            return rows, (H.label, res.describe())
    return rows, None


def _is_fixed(L: LatticeAction, u: int) -> bool:
    e = tuple(int(i == u) for i in range(L.rank))
    return all(g.row(u) == e for g in L.group.elements)


def _flip_target(L: LatticeAction, u: int, j: int) -> tuple[int, ...]:
    return tuple((i == u) - (i == j) for i in range(L.rank))


def find_flip(L: LatticeAction, g: IntMatrix, u: int) -> int | None:
    """Basis index ``j`` with ``e_j A_g = e_u - e_j``, if any."""
    for j in range(L.rank):
        if j != u and g.row(j) == _flip_target(L, u, j):
            return j
    return None


def _matrix_json(m: IntMatrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in m.data]


def parity_test_simple(L: LatticeAction, u) -> TestOutcome:
    u = L.basis_index(u)
    name = "parity-simple"
    # cheap structural checks first; the H^1 table is the expensive part
    if not _is_fixed(L, u):
        return TestOutcome(name, False, f"basis element {u} is not fixed by the group")
    flips = {}
    G = L.group
    for g, gname in zip(G.elements[1:], G.names[1:]):
        j = find_flip(L, g, u)
        if j is None:
            return TestOutcome(name, False, f"no flip for {gname}")
        flips[gname] = j
    N = norm_sum(L)
    odd = [(i, j) for i in range(N.rows) for j in range(N.cols) if N[i, j] % 2]
    if odd:
        return TestOutcome(name, False, f"norm sum has odd entry at {odd[0]}", {"norm_sum": _matrix_json(N)})
    rows, bad = _h1_checks(L)
    if bad:
        return TestOutcome(name, False, f"H1({bad[0]}, M) != 0 ({bad[1]})", {"h1": rows})
    cert = ParityCertificate(
        kind="simple",
        invariant_index=u,
        flip_data=flips,
        evidence={
            "norm_sum": _matrix_json(N),
            "matrices": {n: _matrix_json(g) for n, g in zip(G.names, G.elements)},
        },
        subgroup_h1_checks=rows,
    )
    return TestOutcome(
        name,
        True,
        "H1 = 0 on all subgroups, every element flips into u, norm sum is even",
        {"certificate": cert.to_json()},
    )


def parity_test_refined(L: LatticeAction, u, tau_star: str, w) -> TestOutcome:
    """Hyperplane form of the parity argument.

    Stabilizers containing ``tau_star`` are handled by the flip
    ``e_w A = e_u - e_w``; every other stabilizer lies in a hyperplane
    avoiding ``tau_star``, and each such hyperplane needs a witness element
    outside it whose ``(A + I)`` keeps the ``u``-coordinate even.
    """
    G = L.group
    if not G.is_elementary_abelian_2():
        raise NotElementaryAbelian2Group(f"{G.label} has an element of order > 2")
    u = L.basis_index(u)
    w = L.basis_index(w)
    t_star = G.element(tau_star)
    name = "parity-refined"
    if not _is_fixed(L, u):
        return TestOutcome(name, False, f"basis element {u} is not fixed by the group")
    if t_star.row(w) != _flip_target(L, u, w):
        return TestOutcome(name, False, f"flip relation e_w.{tau_star} = e_u - e_w fails")
    rows, bad = _h1_checks(L)
    if bad:
        return TestOutcome(name, False, f"H1({bad[0]}, M) != 0 ({bad[1]})", {"h1": rows})

    ident = IntMatrix.identity(L.rank)
    witnesses = []
    for H in G.hyperplanes():
        if t_star in H:
            continue
        found = None
        fixed = invariant_sublattice(L, H)
        base = {"hyperplane": H.label, "members": list(H.names)}
        for g, gname in zip(G.elements, G.names):
            if g in H:
                continue
            plus = g + ident
            col = plus.column(u)
            if all(x % 2 == 0 for x in col):
                found = {**base, "tau": gname, "mode": "column", "column": [str(x) for x in col]}
                break
            ucol = (fixed @ plus).column(u)
            if all(x % 2 == 0 for x in ucol):
                found = {
                    **base,
                    "tau": gname,
                    "mode": "invariants",
                    "invariant_basis": _matrix_json(fixed),
                    "column": [str(x) for x in ucol],
                }
                break
        if found is None:
            return TestOutcome(
                name, False, f"no even witness for hyperplane {H.label}", {"h1": rows, "witnesses": witnesses}
            )
        witnesses.append(found)
    cert = ParityCertificate(
        kind="refined",
        invariant_index=u,
        flip_data={"tau_star": tau_star, "w": w},
        evidence={
            "witnesses": witnesses,
            "matrices": {n: _matrix_json(g) for n, g in zip(G.names, G.elements)},
        },
        subgroup_h1_checks=rows,
    )
    return TestOutcome(
        name,
        True,
        f"H1 = 0 on all subgroups; flip under {tau_star}; "
        f"{len(witnesses)} hyperplanes avoiding {tau_star} have even witnesses",
        {"certificate": cert.to_json()},
    )


# ----------------------------------------------------------------------
# replay without the library


def _ints(m):
    return [[int(x) for x in r] for r in m]


def _mul(a, b):
    return [[sum(x * y for x, y in zip(r, c)) for c in zip(*b)] for r in a]


def _echelon_q(rows):
    """Row echelon form over Q (as Fractions); returns the nonzero rows."""
    m = [[Fraction(x) for x in r] for r in rows]
    out = []
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i, r in enumerate(m) if r[c]), None)
        if p is None:
            continue
        piv = m.pop(p)
        m = [[x - r[c] / piv[c] * y for x, y in zip(r, piv)] for r in m]
        out.append(piv)
    return out


def _det_q(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(len(m)):
        p = next((i for i in range(c, len(m)) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, len(m)):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return int(det)


def _spans_fixed_lattice(basis, mats, members, n) -> bool:
    """Rank equals dim of the fixed space, and the basis is saturated."""
    diffs = [[m[i][j] - (i == j) for i in range(n)] for h in members for m in [mats[h]] for j in range(n)]
    fixed_dim = n - len(_echelon_q(diffs)) if diffs else n
    k = len(basis)
    if k != fixed_dim or len(_echelon_q(basis)) != k:
        return False
    if k == 0:
        return True
    # saturated iff the k x k minors are coprime
    g = 0
    for cols in combinations(range(n), k):
        g = gcd(g, _det_q([[r[c] for c in cols] for r in basis]))
        if g == 1:
            return True
    return False


def replay_certificate(cert: dict) -> bool:
    """Re-run the checks of a serialized certificate.

    Uses only plain lists and Fractions, so a certificate can be checked
    independently of the linear algebra that produced it.  The H^1 table is
    trusted as data.
    """
    mats = {k: _ints(v) for k, v in cert["evidence"]["matrices"].items()}
    n = len(next(iter(mats.values())))
    u = cert["invariant_index"]
    e_u = [int(i == u) for i in range(n)]
    if any(m[u] != e_u for m in mats.values()):
        return False
    if any(row.get("invariant_factors") for row in cert["subgroup_h1_checks"]):
        return False
    if cert["kind"] == "simple":
        for gname, j in cert["flip_data"].items():
            if mats[gname][j] != [(i == u) - (i == j) for i in range(n)]:
                return False
        total = [[sum(m[i][j] for m in mats.values()) for j in range(n)] for i in range(n)]
        if total != _ints(cert["evidence"]["norm_sum"]):
            return False
        return all(x % 2 == 0 for r in total for x in r)
    w = cert["flip_data"]["w"]
    t_star = cert["flip_data"]["tau_star"]
    if mats[t_star][w] != [(i == u) - (i == w) for i in range(n)]:
        return False
    if any(_mul(m, m) != _mul(mats["1"], mats["1"]) for m in mats.values()):
        return False
    # hyperplanes avoiding a fixed non-identity element of C2^k number |G|/2
    seen = set()
    for wit in cert["evidence"]["witnesses"]:
        members = wit["members"]
        as_rows = {tuple(map(tuple, mats[x])) for x in members}
        if 2 * len(members) != len(mats) or t_star in members or wit["tau"] in members:
            return False
        if any(tuple(map(tuple, _mul(mats[a], mats[b]))) not in as_rows for a in members for b in members):
            return False
        seen.add(frozenset(members))
    if len(seen) != len(mats) // 2:
        return False
    for wit in cert["evidence"]["witnesses"]:
        if wit["mode"] == "invariants":
            basis = _ints(wit["invariant_basis"])
            if any(_mul([f], mats[h])[0] != f for f in basis for h in wit["members"]):
                return False
            if not _spans_fixed_lattice(basis, mats, wit["members"], n):
                return False
        plus = [[x + (i == j) for j, x in enumerate(r)] for i, r in enumerate(mats[wit["tau"]])]
        if wit["mode"] == "column":
            col = [plus[i][u] for i in range(n)]
        else:
            basis = _ints(wit["invariant_basis"])
            col = [sum(f[i] * plus[i][u] for i in range(n)) for f in basis]
        if any(x % 2 for x in col):
            return False
    return True
