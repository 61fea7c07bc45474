"""First cohomology and Tate cohomology in degree -1 for lattice actions.

Cocycles satisfy ``a(gh) = a(g) + a(h) @ A_g``.  Left and right actions
agree because every group handled here is abelian.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import NotACocycle, SchemaMismatch
from .groups import LatticeAction, all_subgroups, lattice_action, restrict_action
from .lattice import (
    IntMatrix,
    QuotientStructure,
    Row,
    kernel_basis,
    quotient_invariants,
    row_space_basis,
    solve_left,
)


@dataclass(frozen=True)
class Cocycle:
    """Values of a 1-cocycle, keyed by group element name."""

    values: Mapping[str, Row]

    def __getitem__(self, name: str) -> Row:
        return self.values[name]

    def to_json(self) -> dict:
        return {k: [str(x) for x in v] for k, v in self.values.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, Sequence]) -> "Cocycle":
        return cls({k: tuple(int(str(x).replace("−", "-")) for x in v) for k, v in obj.items()})


def make_cocycle(L: LatticeAction, values: Mapping[str, Sequence[int]]) -> Cocycle:
    """Fill in zeros for unnamed elements (including the identity)."""
    unknown = set(values) - set(L.group.names)
    if unknown:
        raise SchemaMismatch(f"cocycle names {sorted(unknown)} are not group elements")
    out = {}
    for name in L.group.names:
        v = tuple(values.get(name, (0,) * L.rank))
        if len(v) != L.rank:
            raise SchemaMismatch(f"cocycle value at {name} has length {len(v)}, rank is {L.rank}")
        out[name] = v
    return Cocycle(out)


@dataclass(frozen=True)
class CohomologyResult:
    structure: QuotientStructure
    representatives: tuple = ()

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.structure.invariant_factors

    @property
    def order(self) -> int:
        return self.structure.order

    @property
    def is_zero(self) -> bool:
        return self.structure.is_trivial

    def describe(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)

    def to_json(self) -> dict:
        reps = []
        for r in self.representatives:
            reps.append(r.to_json() if isinstance(r, Cocycle) else [str(x) for x in r])
        return {**self.structure.to_json(), "representatives": reps}


@dataclass(frozen=True)
class TestOutcome:
    """Result of an irrationality test: certified, or inconclusive with a reason."""

    test: str
    certified: bool
    reason: str
    evidence: dict = field(default_factory=dict)

    __test__ = False  # not a pytest class

    @property
    def status(self) -> str:
        return "certified" if self.certified else "inconclusive"

    def to_json(self) -> dict:
        return {
            "test": self.test,
            "status": self.status,
            "reason": self.reason,
            "evidence": self.evidence,
        }


# ----------------------------------------------------------------------
# linear systems


def _cocycle_system(L: LatticeAction):
    """Constraint matrix ``C`` with ``X @ C == 0`` exactly on cocycles.

    ``X`` concatenates ``a(g)`` for every non-identity ``g`` in group order.
    """
    G = L.group
    r = L.rank
    nonid = G.elements[1:]
    pos = {g: k for k, g in enumerate(nonid)}
    n = len(nonid) * r
    columns: list[list[int]] = []
    for g in nonid:
        for h in nonid:
            gh = g @ h
            # a(gh) - a(g) - a(h) A_g = 0, one column per coordinate
            for c in range(r):
                col = [0] * n
                if gh in pos:
                    col[pos[gh] * r + c] += 1
                col[pos[g] * r + c] -= 1
                base = pos[h] * r
                for i in range(r):
                    col[base + i] -= g[i, c]
                columns.append(col)
    C = IntMatrix([list(x) for x in zip(*columns)], cols=len(columns)) if columns else IntMatrix.zeros(n, 0)
    return C, nonid


def _coboundary_generators(L: LatticeAction) -> IntMatrix:
    """Row ``i`` is the coboundary of ``e_i``: ``g -> e_i (A_g - I)``."""
    r = L.rank
    rows = []
    for i in range(r):
        row: list[int] = []
        for g in L.group.elements[1:]:
            gi = list(g.row(i))
            gi[i] -= 1
            row.extend(gi)
        rows.append(row)
    return IntMatrix(rows, cols=(L.group.order - 1) * r)


def _to_vector(L: LatticeAction, a: Cocycle) -> list[int]:
    vec: list[int] = []
    for name in L.group.names[1:]:
        vec.extend(a.values.get(name, (0,) * L.rank))
    return vec


def _from_vector(L: LatticeAction, vec: Sequence[int]) -> Cocycle:
    r = L.rank
    values = {L.group.names[0]: (0,) * r}
    for k, name in enumerate(L.group.names[1:]):
        values[name] = tuple(vec[k * r:(k + 1) * r])
    return Cocycle(values)


def check_cocycle(L: LatticeAction, a: Cocycle) -> None:
    G = L.group
    zero = (0,) * L.rank
    for name in a.values:
        if name not in G.names:
            raise NotACocycle(f"{name!r} is not an element of {G.label}")
    val = {g: tuple(a.values.get(n, zero)) for g, n in zip(G.elements, G.names)}
    if any(len(v) != L.rank for v in val.values()):
        raise NotACocycle("cocycle values have the wrong length")
    for g in G.elements:
        for h in G.elements:
            lhs = val[g @ h]
            rhs = tuple(x + y for x, y in zip(val[g], g.apply(val[h])))
            if lhs != rhs:
                raise NotACocycle(
                    f"a({G.name_of(g @ h)}) != a({G.name_of(g)}) + a({G.name_of(h)}).{G.name_of(g)}"
                )


def is_cocycle(L: LatticeAction, a: Cocycle) -> bool:
    try:
        check_cocycle(L, a)
    except NotACocycle:
        return False
    return True


# ----------------------------------------------------------------------
# H^1


def h1(L: LatticeAction) -> CohomologyResult:
    """``H^1(G, M)`` as cocycles modulo coboundaries, with explicit generators."""
    if L.group.order == 1 or L.rank == 0:
        return CohomologyResult(QuotientStructure(0, (), ()), ())
    C, _ = _cocycle_system(L)
    Z = kernel_basis(C)
    B = _coboundary_generators(L)
    coords = solve_left(Z, B)
    assert coords is not None, "coboundaries must be cocycles"
    q = quotient_invariants(coords, Z.rows)
    assert q.free_rank == 0, "H^1 of a finite group is torsion"
    reps = tuple(_from_vector(L, Z.apply(c)) for c in q.torsion_representatives)
    return CohomologyResult(q, reps)


@dataclass(frozen=True)
class CoboundaryCheck:
    is_coboundary: bool
    witness: Row | None = None

    def __bool__(self):
        return self.is_coboundary


def is_coboundary(L: LatticeAction, a: Cocycle) -> CoboundaryCheck:
    """Decide whether ``a(g) = m A_g - m`` for some lattice vector ``m``."""
    check_cocycle(L, a)
    if L.group.order == 1 or L.rank == 0:
        return CoboundaryCheck(True, (0,) * L.rank)
    sol = solve_left(_coboundary_generators(L), [_to_vector(L, a)])
    if sol is None:
        return CoboundaryCheck(False)
    return CoboundaryCheck(True, sol.row(0))


def subgroup_h1_table(L: LatticeAction) -> list[tuple[str, CohomologyResult]]:
    return [(H.label, h1(restrict_action(L, H))) for H in all_subgroups(L.group)]


# ----------------------------------------------------------------------
# Tate cohomology in degree -1


def norm_matrix(L: LatticeAction) -> IntMatrix:
    out = IntMatrix.zeros(L.rank, L.rank)
    for g in L.group.elements:
        out = out + g
    return out


def augmentation_basis(L: LatticeAction) -> IntMatrix:
    """Hermite basis of the span of ``m A_g - m``."""
    rows = []
    for g in L.group.elements[1:]:
        for i in range(L.rank):
            gi = list(g.row(i))
            gi[i] -= 1
            rows.append(gi)
    return row_space_basis(IntMatrix(rows, cols=L.rank)) if rows else IntMatrix([], cols=L.rank)


def tate_minus1(L: LatticeAction) -> CohomologyResult:
    """Kernel of the norm map modulo the augmentation sublattice."""
    if L.rank == 0:
        return CohomologyResult(QuotientStructure(0, (), ()), ())
    K = kernel_basis(norm_matrix(L))
    if K.rows == 0:
        return CohomologyResult(QuotientStructure(0, (), ()), ())
    aug = augmentation_basis(L)
    coords = solve_left(K, aug) if aug.rows else IntMatrix([], cols=K.rows)
    assert coords is not None, "augmentation must lie in the norm kernel"
    q = quotient_invariants(coords, K.rows)
    assert q.free_rank == 0, "Tate cohomology of a finite group is torsion"
    reps = tuple(K.apply(c) for c in q.torsion_representatives)
    return CohomologyResult(q, reps)


def in_norm_kernel(L: LatticeAction, x: Sequence[int]) -> bool:
    return not any(norm_matrix(L).apply(x))


def is_tate_trivial(L: LatticeAction, x: Sequence[int]) -> bool:
    """True if ``x`` lies in the augmentation sublattice (zero class)."""
    if not in_norm_kernel(L, x):
        raise ValueError("vector is not in the kernel of the norm map")
    aug = augmentation_basis(L)
    if aug.rows == 0:
        return not any(x)
    return solve_left(aug, [list(x)]) is not None


# ----------------------------------------------------------------------


def adjoin_trivializer(L: LatticeAction, a: Cocycle) -> LatticeAction:
    """Extend ``M`` by one basis vector so that ``a`` becomes a coboundary.

    The new action is ``[[A_g, 0], [-a(g), 1]]``; the padded cocycle is the
    coboundary of minus the new basis vector.
    """
    check_cocycle(L, a)
    G = L.group
    gens = []
    for g, name in zip(G.generators, G.generator_names):
        val = a.values.get(G.name_of(g), (0,) * L.rank)
        rows = [list(r) + [0] for r in g.data]
        rows.append([-x for x in val] + [1])
        gens.append(IntMatrix(rows, cols=L.rank + 1))
    labels = None
    if L.labels is not None:
        labels = L.labels + (f"e{L.rank + 1}",)
    ext = lattice_action(gens, names=G.generator_names, labels=labels, name=L.name + "+triv" if L.name else "")
    if ext.group.order != G.order:
        raise NotACocycle("extension does not define an action of the same group")
    return ext


def pad_cocycle(a: Cocycle, extra: int = 1) -> Cocycle:
    return Cocycle({k: tuple(v) + (0,) * extra for k, v in a.values.items()})


def nonvanishing_test(L: LatticeAction) -> TestOutcome:
    """Certify irrationality when H^1 vanishes on every subgroup but Ĥ^-1 does not."""
    table = []
    for H in all_subgroups(L.group):
        res = h1(restrict_action(L, H))
        table.append({"subgroup": H.label, "order": H.order, **res.structure.to_json()})
        if not res.is_zero:
            return TestOutcome(
                "nonvanishing",
                False,
                f"H1({H.label}, M) != 0 ({res.describe()})",
                {"h1": table},
            )
    t = tate_minus1(L)
    evidence = {"h1": table, "tate_minus1": t.to_json()}
    if t.is_zero:
        return TestOutcome("nonvanishing", False, "Tate H^-1(G, M) = 0", evidence)
    return TestOutcome(
        "nonvanishing",
        True,
        f"H1 vanishes on all {len(table)} subgroups and Tate H^-1(G, M) = {t.describe()}",
        evidence,
    )
