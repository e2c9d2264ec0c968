"""Exact rational linear algebra and canonical subspace representations.

Subspaces of Q^n are stored through their space of defining linear forms
(the "normals"), kept in reduced row echelon form so that two subspaces are
equal exactly when their normal tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Covector = tuple  # tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


def as_covector(row: Iterable) -> Covector:
    return tuple(Fraction(c) for c in row)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (nonzero rows, pivot columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if inv != 1:
            for k in range(c, ncols):
                if pr[k]:
                    pr[k] *= inv
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for k in range(c, ncols):
                    if pr[k]:
                        ri[k] -= f * pr[k]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref_matrix(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form of ``rows``: (basis rows, pivot columns)."""
    work = [[Fraction(c) for c in row] for row in rows]
    if ncols is None:
        if not work:
            raise DimensionError("cannot infer column count of an empty matrix")
        ncols = len(work[0])
    if any(len(row) != ncols for row in work):
        raise DimensionError("rows have unequal lengths")
    basis, pivots = _rref_rows(work, ncols)
    return [tuple(row) for row in basis], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref_matrix(rows, ncols)[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of {v : row . v = 0 for every row}, one vector per free column."""
    basis, pivots = rref_matrix(rows, ncols) if rows else ([], [])
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(basis, pivots):
            v[p] = -row[free]
        out.append(tuple(v))
    return out


def inverse(matrix: Sequence[Sequence]) -> list[tuple]:
    n = len(matrix)
    aug = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    basis, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(basis) < n:
        raise ValueError("matrix is singular")
    return [tuple(row[n:]) for row in basis]


def mat_vec(matrix: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in matrix)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n given by its canonical RREF normal rows."""

    normals: tuple
    ambient_dim: int

    @property
    def codim(self) -> int:
        return len(self.normals)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.normals)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, c in enumerate(row) if c) for row in self.normals)

    @classmethod
    def ambient(cls, n: int) -> "Subspace":
        return rref((), n)

    @classmethod
    def origin(cls, n: int) -> "Subspace":
        return rref([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ",".join(str(c) for c in row) + ")" for row in self.normals)
        return f"Subspace(n={self.ambient_dim}, normals=[{rows}])"

    def spans_form(self, form: Sequence) -> bool:
        """True iff the linear form vanishes on this subspace."""
        return rank(list(self.normals) + [tuple(form)], self.ambient_dim) == self.codim

    def contains_point(self, point: Sequence) -> bool:
        return all(dot(row, point) == 0 for row in self.normals)

    def basis(self) -> list[tuple]:
        """Spanning vectors of the subspace itself."""
        return nullspace(list(self.normals), self.ambient_dim)


def rref(rows: Iterable[Sequence], ambient_dim: int | None = None) -> Subspace:
    rows = [as_covector(r) for r in rows]
    if ambient_dim is None:
        if not rows:
            raise DimensionError("ambient dimension required for an empty row set")
        ambient_dim = len(rows[0])
    if ambient_dim < 1:
        raise DimensionError("ambient dimension must be positive")
    basis, _ = rref_matrix(rows, ambient_dim) if rows else ([], [])
    return Subspace(tuple(basis), ambient_dim)


def _check_dims(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_dims(a, b)
    return rref(list(a.normals) + list(b.normals), a.ambient_dim)


def subspace_contains(outer: Subspace, inner: Subspace) -> bool:
    """True iff inner is a subset of outer."""
    _check_dims(outer, inner)
    if outer.codim > inner.codim:
        return False
    return rank(list(inner.normals) + list(outer.normals), inner.ambient_dim) == inner.codim


def adapted_basis(w: Subspace) -> list[tuple]:
    """Invertible matrix M with new coordinates y = M x, where y_1..y_r cut out ``w``.

    The first r rows are the canonical normals; the rest are unit covectors on
    the non-pivot columns, which keeps M unitriangular up to a permutation.
    """
    n = w.ambient_dim
    piv = set(w.pivots)
    rows = list(w.normals)
    for c in range(n):
        if c not in piv:
            rows.append(tuple(Fraction(int(k == c)) for k in range(n)))
    return rows
