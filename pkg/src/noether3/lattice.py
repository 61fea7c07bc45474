"""Exact integer linear algebra over Z.

Vectors are coordinate rows and matrices act by right multiplication, so
row ``i`` of a matrix is the image of the ``i``-th basis vector.  All
arithmetic uses Python integers; nothing here ever rounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Row = tuple[int, ...]


def _parse_int(value) -> int:
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        # accept the unicode minus sign as well as ASCII
        return int(value.strip().replace("−", "-"))
    raise TypeError(f"cannot read integer entry from {value!r}")


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(_parse_int(x) for x in r) for r in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"ragged row of length {len(r)}, expected {cols}")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        out = []
        for block_row in blocks:
            height = block_row[0].rows
            for i in range(height):
                line: list[int] = []
                for b in block_row:
                    if b.rows != height:
                        raise DimensionMismatch("block heights disagree")
                    line.extend(b.data[i])
                out.append(line)
        return cls(out, cols=len(out[0]) if out else 0)

    # protocol ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.cols == other.cols and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]})"

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> Row:
        return self.data[i]

    def column(self, j: int) -> Row:
        return tuple(r[j] for r in self.data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    # arithmetic -------------------------------------------------------
    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols_o = list(zip(*other.data)) if other.rows else [()] * other.cols
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols_o] for r in self.data],
            cols=other.cols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self.data], cols=self.cols)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * a for a in r] for r in self.data], cols=self.cols)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} != {other.shape}")

    def transpose(self) -> "IntMatrix":
        if not self.rows:
            return IntMatrix([()] * self.cols, cols=0)
        return IntMatrix([list(c) for c in zip(*self.data)], cols=self.rows)

    T = property(transpose)

    def apply(self, vec: Sequence[int]) -> Row:
        """Row vector times this matrix."""
        if len(vec) != self.rows:
            raise DimensionMismatch(f"vector of length {len(vec)} against {self.shape}")
        out = [0] * self.cols
        for c, r in zip(vec, self.data):
            if c:
                for j, a in enumerate(r):
                    if a:
                        out[j] += c * a
        return tuple(out)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.rows) if self.is_square() else False

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    # serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": [[str(x) for x in r] for r in self.data],
        }

    @classmethod
    def from_json(cls, obj) -> "IntMatrix":
        """Read ``{"rows", "cols", "data"}`` or a bare array of arrays."""
        if isinstance(obj, dict):
            m = cls(obj.get("data", []), cols=obj.get("cols"))
            if "rows" in obj and obj["rows"] != m.rows:
                raise DimensionMismatch(f"declared {obj['rows']} rows, found {m.rows}")
            return m
        return cls(obj)


def as_matrix(obj) -> IntMatrix:
    return obj if isinstance(obj, IntMatrix) else IntMatrix(obj)


# ----------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix = field(repr=False, compare=False)

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i, i] for i in range(min(self.S.rows, self.S.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for r in m:
        r[i], r[j] = r[j], r[i]


def _add_row(m, dst, src, k):
    """row[dst] += k * row[src]"""
    if k:
        rs = m[src]
        rd = m[dst]
        for j, a in enumerate(rs):
            if a:
                rd[j] += k * a


def _add_col(m, dst, src, k):
    """col[dst] += k * col[src]"""
    if k:
        for r in m:
            if r[src]:
                r[dst] += k * r[src]


def _smith_step(S, t, m, n, row_op, row_swap, col_op, col_swap) -> bool:
    """Clear row and column ``t`` around a pivot dividing the remaining block.

    Returns False when the trailing block is already zero.
    """
    while True:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = S[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            return False
        _, pi, pj = best
        if pi != t:
            row_swap(pi, t)
        if pj != t:
            col_swap(pj, t)
        p = S[t][t]
        dirty = False
        for i in range(t + 1, m):
            if S[i][t]:
                row_op(i, t, -(S[i][t] // p))
                dirty = dirty or S[i][t] != 0
        for j in range(t + 1, n):
            if S[t][j]:
                col_op(j, t, -(S[t][j] // p))
                dirty = dirty or S[t][j] != 0
        if dirty:
            continue
        bad = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
            None,
        )
        if bad is None:
            return True
        row_op(t, bad, 1)


def smith_normal_form(A) -> SmithDecomposition:
    A = as_matrix(A)
    m, n = A.shape
    S = [list(r) for r in A.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_op(dst, src, k):
        # S <- S E, V <- V E, V^-1 <- E^-1 V^-1 for E = I + k e_src e_dst^T
        _add_col(S, dst, src, k)
        _add_col(V, dst, src, k)
        _add_row(Vi, src, dst, -k)

    def col_swap(i, j):
        _swap_cols(S, i, j)
        _swap_cols(V, i, j)
        _swap_rows(Vi, i, j)

    def row_op(dst, src, k):
        _add_row(S, dst, src, k)
        _add_row(U, dst, src, k)

    def row_swap(i, j):
        _swap_rows(S, i, j)
        _swap_rows(U, i, j)

    for t in range(min(m, n)):
        if not _smith_step(S, t, m, n, row_op, row_swap, col_op, col_swap):
            break
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    return SmithDecomposition(
        U=IntMatrix(U, cols=m),
        S=IntMatrix(S, cols=n),
        V=IntMatrix(V, cols=n),
        V_inv=IntMatrix(Vi, cols=n),
    )


# ----------------------------------------------------------------------
# Hermite-style echelon forms


def _echelon(rows: list[list[int]], ncols: int, track: bool):
    """Row-reduce in place to Hermite normal form.

    Returns ``(H, T, rank)`` where ``T`` (if tracked) is unimodular with
    ``T @ input == H``; the first ``rank`` rows of ``H`` are nonzero with
    positive pivots, and entries above each pivot lie in ``[0, pivot)``.
    """
    H = [list(r) for r in rows]
    m = len(H)
    T = [[int(i == j) for j in range(m)] for i in range(m)] if track else None

    def add(dst, src, k):
        _add_row(H, dst, src, k)
        if track:
            _add_row(T, dst, src, k)

    def swap(i, j):
        _swap_rows(H, i, j)
        if track:
            _swap_rows(T, i, j)

    def negate(i):
        H[i] = [-x for x in H[i]]
        if track:
            T[i] = [-x for x in T[i]]

    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [(abs(H[i][c]), i) for i in range(r, m) if H[i][c]]
            if not nz:
                break
            _, pi = min(nz)
            if pi != r:
                swap(pi, r)
            p = H[r][c]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    add(i, r, -(H[i][c] // p))
                    if H[i][c]:
                        done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            negate(r)
        p = H[r][c]
        for i in range(r):
            if H[i][c] < 0 or H[i][c] >= p:
                add(i, r, -(H[i][c] // p))
        pivots.append(c)
        r += 1
    return H, T, r, pivots


def row_space_basis(rows) -> IntMatrix:
    """Canonical (Hermite normal form) basis of the lattice spanned by ``rows``."""
    M = as_matrix(rows)
    H, _, r, _ = _echelon(M.tolist(), M.cols, track=False)
    return IntMatrix(H[:r], cols=M.cols)


def kernel_basis(A) -> IntMatrix:
    """Saturated basis of ``{x : x @ A == 0}`` as rows, in Hermite form."""
    A = as_matrix(A)
    _, T, r, _ = _echelon(A.tolist(), A.cols, track=True)
    return row_space_basis(IntMatrix(T[r:], cols=A.rows))


def solve_left(A, B):
    """Return integer ``X`` with ``X @ A == B``, or ``None`` if none exists."""
    A = as_matrix(A)
    B = as_matrix(B)
    if B.cols != A.cols:
        raise DimensionMismatch(f"right-hand side has {B.cols} columns, expected {A.cols}")
    H, T, r, pivots = _echelon(A.tolist(), A.cols, track=True)
    out = []
    for b in B.data:
        b = list(b)
        coeffs = [0] * r
        for i, c in enumerate(pivots):
            if b[c]:
                q, rem = divmod(b[c], H[i][c])
                if rem:
                    return None
                coeffs[i] = q
                for j in range(c, A.cols):
                    if H[i][j]:
                        b[j] -= q * H[i][j]
        if any(b):
            return None
        x = [0] * A.rows
        for i, q in enumerate(coeffs):
            if q:
                for j, t in enumerate(T[i]):
                    if t:
                        x[j] += q * t
        out.append(x)
    return IntMatrix(out, cols=A.rows)


def in_row_space(rows, vec: Sequence[int]) -> bool:
    return solve_left(rows, [list(vec)]) is not None


def same_lattice(a, b) -> bool:
    return row_space_basis(a) == row_space_basis(b)


def reduce_modulo(vec: Sequence[int], hnf: IntMatrix) -> Row:
    """Reduce ``vec`` against a Hermite basis so pivot entries lie in ``[0, pivot)``."""
    v = list(vec)
    for r in hnf.data:
        c = next(j for j, a in enumerate(r) if a)
        q = v[c] // r[c]
        if q:
            for j in range(c, len(v)):
                v[j] -= q * r[j]
    return tuple(v)


# ----------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientStructure:
    """Shape of ``Z^n / L`` as ``Z^free_rank + sum Z/d_i``."""

    free_rank: int
    invariant_factors: tuple[int, ...]
    torsion_representatives: tuple[Row, ...]

    @property
    def order(self) -> int:
        """Order of the torsion part."""
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors),
        }


def quotient_invariants(sub, ambient_rank: int) -> QuotientStructure:
    sub = sub if isinstance(sub, IntMatrix) else IntMatrix(sub, cols=None if len(sub) else ambient_rank)
    if sub.rows and sub.cols != ambient_rank:
        raise DimensionMismatch(f"sublattice has {sub.cols} columns, ambient rank is {ambient_rank}")
    if sub.rows == 0:
        return QuotientStructure(ambient_rank, (), ())
    snf = smith_normal_form(sub)
    diag = snf.diagonal
    rank = snf.rank
    hnf = row_space_basis(sub)
    factors = []
    reps = []
    for j, d in enumerate(diag[:rank]):
        if d > 1:
            factors.append(d)
            reps.append(reduce_modulo(snf.V_inv.row(j), hnf))
    return QuotientStructure(ambient_rank - rank, tuple(factors), tuple(reps))
