"""Finite abelian matrix groups and the lattices they act on.

A group element *is* its action matrix: the presentation is assumed
faithful.  Elements are named by their shortest word in the generators,
e.g. ``t1t3`` or ``s^2``, and subgroups inherit the names of the parent.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    DimensionMismatch,
    NonAbelian,
    NotASubgroup,
    NotUnimodular,
    SchemaMismatch,
)
from .lattice import IntMatrix, as_matrix

IDENTITY_NAME = "1"
DEFAULT_CAP = 1024


def _word(gen_names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for g, e in zip(gen_names, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "".join(parts) or IDENTITY_NAME


@dataclass(frozen=True)
class FiniteMatrixGroup:
    rank: int
    elements: tuple[IntMatrix, ...]
    names: tuple[str, ...]
    generators: tuple[IntMatrix, ...]
    generator_names: tuple[str, ...]
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.elements)})
        if len(self._index) != len(self.elements):
            raise ValueError("group elements must be pairwise distinct")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> IntMatrix:
        return self.elements[0]

    @property
    def label(self) -> str:
        return "<" + (",".join(self.generator_names) or IDENTITY_NAME) + ">"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def index(self, g: IntMatrix) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise NotASubgroup("matrix is not an element of this group") from None

    def name_of(self, g: IntMatrix) -> str:
        return self.names[self.index(g)]

    def element(self, name: str) -> IntMatrix:
        try:
            return self.elements[self.names.index(name)]
        except ValueError:
            raise NotASubgroup(f"no element named {name!r} in {self.label}") from None

    def non_identity(self) -> list[IntMatrix]:
        return list(self.elements[1:])

    def element_order(self, g: IntMatrix) -> int:
        k, x = 1, g
        while x != self.identity:
            x = x @ g
            k += 1
        return k

    def is_elementary_abelian_2(self) -> bool:
        return all((g @ g) == self.identity for g in self.elements)

    def is_subgroup_of(self, other: "FiniteMatrixGroup") -> bool:
        return all(g in other for g in self.elements)

    def same_elements(self, other: "FiniteMatrixGroup") -> bool:
        return set(self.elements) == set(other.elements)

    def subgroup(self, names: Iterable[str]) -> "FiniteMatrixGroup":
        """Subgroup generated by the named elements."""
        idx = {0}
        for n in names:
            if n not in self.names:
                raise NotASubgroup(f"no element named {n!r} in {self.label}")
            idx.add(self.names.index(n))
        return _subgroup_from(self, _close_indices(_cayley(self), idx))

    def hyperplanes(self) -> list["FiniteMatrixGroup"]:
        return [H for H in all_subgroups(self) if 2 * H.order == self.order]


def _check_square(gens: Sequence[IntMatrix]) -> int:
    if not gens:
        raise DimensionMismatch("at least one generator is required")
    n = gens[0].rows
    for g in gens:
        if not g.is_square() or g.rows != n:
            raise DimensionMismatch("generators must be square matrices of equal size")
    return n


def close_group(
    generators: Sequence,
    cap: int = DEFAULT_CAP,
    names: Sequence[str] | None = None,
) -> FiniteMatrixGroup:
    """Close a list of unimodular matrices into a finite abelian group.

    Raises NotUnimodular, NonAbelian or CapExceeded.
    """
    gens = [as_matrix(g) for g in generators]
    n = _check_square(gens)
    if names is None:
        names = [f"t{i + 1}" for i in range(len(gens))]
    names = list(names)
    if len(names) != len(gens):
        raise SchemaMismatch("one name per generator is required")
    for name, g in zip(names, gens):
        if abs(g.det()) != 1:
            raise NotUnimodular(f"generator {name} has determinant {g.det()}")
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if a @ b != b @ a:
                raise NonAbelian("generators do not commute")

    ident = IntMatrix.identity(n)
    seen = {ident: (0,) * len(gens)}
    order = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for k, g in enumerate(gens):
            y = x @ g
            if y not in seen:
                exps = list(seen[x])
                exps[k] += 1
                seen[y] = tuple(exps)
                order.append(y)
                if len(order) > cap:
                    raise CapExceeded(f"group closure exceeded {cap} elements")
                queue.append(y)
    # generators commute, so the closure is abelian
    return FiniteMatrixGroup(
        rank=n,
        elements=tuple(order),
        names=tuple(_word(names, seen[x]) for x in order),
        generators=tuple(gens),
        generator_names=tuple(names),
    )


def _cayley(G: FiniteMatrixGroup) -> list[list[int]]:
    return [[G.index(a @ b) for b in G.elements] for a in G.elements]


def _close_indices(table, idx: set[int]) -> frozenset[int]:
    out = set(idx)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                for c in (table[a][b], table[b][a]):
                    if c not in out:
                        out.add(c)
                        new.append(c)
        frontier = new
    return frozenset(out)


def _subgroup_from(G: FiniteMatrixGroup, idx: frozenset[int]) -> FiniteMatrixGroup:
    members = sorted(idx)
    table = None
    gens: list[int] = []
    span = frozenset({0})
    for i in members:
        if i not in span:
            if table is None:
                table = _cayley(G)
            gens.append(i)
            span = _close_indices(table, set(span) | {i})
    return FiniteMatrixGroup(
        rank=G.rank,
        elements=tuple(G.elements[i] for i in members),
        names=tuple(G.names[i] for i in members),
        generators=tuple(G.elements[i] for i in gens),
        generator_names=tuple(G.names[i] for i in gens),
    )


def all_subgroups(G: FiniteMatrixGroup) -> list[FiniteMatrixGroup]:
    """Every subgroup once, ordered by size and then by element list."""
    table = _cayley(G)
    found = {frozenset({0})}
    queue = deque(found)
    while queue:
        S = queue.popleft()
        for g in range(G.order):
            if g not in S:
                T = _close_indices(table, set(S) | {g})
                if T not in found:
                    found.add(T)
                    queue.append(T)
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [_subgroup_from(G, s) for s in ordered]


# ----------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeAction:
    """A free Z-module of finite rank with a finite abelian group acting on it."""

    group: FiniteMatrixGroup
    labels: tuple[str, ...] | None = None
    name: str = ""

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != self.group.rank:
            raise SchemaMismatch(
                f"{len(self.labels)} basis labels for a lattice of rank {self.group.rank}"
            )

    @property
    def rank(self) -> int:
        return self.group.rank

    def matrix(self, g) -> IntMatrix:
        if isinstance(g, str):
            return self.group.element(g)
        self.group.index(g)
        return g

    def basis_index(self, key) -> int:
        """Resolve a basis position given as an int or as one of the labels."""
        if isinstance(key, int):
            if not 0 <= key < self.rank:
                raise IndexError(f"basis index {key} out of range for rank {self.rank}")
            return key
        if isinstance(key, str) and key.lstrip("-").isdigit():
            return self.basis_index(int(key))
        if self.labels and key in self.labels:
            return self.labels.index(key)
        raise IndexError(f"unknown basis element {key!r}")

    def validate(self) -> None:
        G = self.group
        n = self.rank
        if G.identity != IntMatrix.identity(n):
            raise SchemaMismatch("identity element does not act trivially")
        for g in G.elements:
            if abs(g.det()) != 1:
                raise NotUnimodular("action matrix is not invertible over Z")
        for g in G.elements:
            for h in G.elements:
                if g @ h not in G:
                    raise SchemaMismatch("action is not closed under products")
                if g @ h != h @ g:
                    raise NonAbelian("action matrices do not commute")

    def to_json(self) -> dict:
        out = {
            "rank": self.rank,
            "generators": [
                {"name": n, "matrix": [[str(x) for x in r] for r in g.data]}
                for n, g in zip(self.group.generator_names, self.group.generators)
            ],
        }
        if self.labels is not None:
            out["labels"] = list(self.labels)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, obj: dict, cap: int = DEFAULT_CAP) -> "LatticeAction":
        try:
            rank = int(obj["rank"])
            gens = obj["generators"]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaMismatch(f"lattice action needs 'rank' and 'generators': {exc}") from None
        if not gens:
            ident = IntMatrix.identity(rank)
            group = FiniteMatrixGroup(rank, (ident,), (IDENTITY_NAME,), (), ())
        else:
            mats = [IntMatrix.from_json(g["matrix"]) for g in gens]
            if any(m.shape != (rank, rank) for m in mats):
                raise SchemaMismatch(f"generator matrices must be {rank}x{rank}")
            group = close_group(mats, cap=cap, names=[g.get("name", f"t{i + 1}") for i, g in enumerate(gens)])
        labels = obj.get("labels")
        return cls(group, tuple(labels) if labels is not None else None, obj.get("name", ""))


def lattice_action(
    generators: Sequence,
    names: Sequence[str] | None = None,
    labels: Sequence[str] | None = None,
    name: str = "",
    cap: int = DEFAULT_CAP,
) -> LatticeAction:
    group = close_group(generators, cap=cap, names=names)
    return LatticeAction(group, tuple(labels) if labels is not None else None, name)


def restrict_action(L: LatticeAction, H: FiniteMatrixGroup) -> LatticeAction:
    if H.rank != L.rank or not H.is_subgroup_of(L.group):
        raise NotASubgroup(f"{H.label} is not a subgroup of the acting group")
    return LatticeAction(H, L.labels, L.name)


def trivial_subgroup(G: FiniteMatrixGroup) -> FiniteMatrixGroup:
    return _subgroup_from(G, frozenset({0}))


def direct_sum(*actions: LatticeAction) -> LatticeAction:
    """Block-diagonal sum of actions of the same abstract generators."""
    k = len(actions[0].group.generators)
    if any(len(a.group.generators) != k for a in actions):
        raise SchemaMismatch("summands must have the same number of generators")
    gens = []
    for i in range(k):
        blocks = [a.group.generators[i] for a in actions]
        n = sum(b.rows for b in blocks)
        rows = []
        off = 0
        for b in blocks:
            for r in b.data:
                rows.append([0] * off + list(r) + [0] * (n - off - b.cols))
            off += b.cols
        gens.append(IntMatrix(rows, cols=n))
    return lattice_action(gens, names=actions[0].group.generator_names)
