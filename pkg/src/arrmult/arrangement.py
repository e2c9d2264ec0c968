"""Hyperplane arrangements over Q and their intersection lattices."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import (DimensionError, Subspace, as_covector, dot, rank, rref, subspace_contains,
                     subspace_intersect)
from .poly import Polynomial, PolynomialSyntaxError, parse_polynomial


class ArrangementError(ValueError):
    """Invalid arrangement data; ``line`` is the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class NotCentral(ArrangementError):
    pass


def _projective_key(normal: tuple, constant: Fraction) -> tuple:
    lead = next(c for c in normal if c)
    return tuple(c / lead for c in normal) + (constant / lead,)


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    constant: Fraction = Fraction(0)

    def __call__(self, point: Sequence) -> Fraction:
        return dot(self.normal, point) + self.constant

    def linear_form(self) -> Polynomial:
        return Polynomial.linear(self.normal, self.constant)


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ArrangementError("ambient dimension must be at least 1")
        if not self.hyperplanes:
            raise ArrangementError("an arrangement needs at least one hyperplane")
        seen = {}
        for i, h in enumerate(self.hyperplanes):
            if len(h.normal) != self.ambient_dim:
                raise ArrangementError(f"hyperplane {i} has {len(h.normal)} coefficients, expected {self.ambient_dim}")
            if not any(h.normal):
                raise ArrangementError(f"hyperplane {i} has a zero normal vector")
            k = _projective_key(h.normal, h.constant)
            if k in seen:
                raise ArrangementError(f"hyperplane {i} duplicates hyperplane {seen[k]}")
            seen[k] = i
        if self.labels is not None and len(self.labels) != len(self.hyperplanes):
            raise ArrangementError("one label per hyperplane required")

    @classmethod
    def from_normals(cls, rows: Iterable[Sequence], constants: Sequence | None = None,
                     labels: Sequence[str] | None = None) -> "Arrangement":
        rows = [as_covector(r) for r in rows]
        if not rows:
            raise ArrangementError("an arrangement needs at least one hyperplane")
        consts = [Fraction(c) for c in constants] if constants is not None else [Fraction(0)] * len(rows)
        hs = tuple(Hyperplane(r, c) for r, c in zip(rows, consts))
        return cls(len(rows[0]), hs, tuple(labels) if labels else None)

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    @property
    def n(self) -> int:
        return self.ambient_dim

    @property
    def is_central(self) -> bool:
        return all(h.constant == 0 for h in self.hyperplanes)

    def normals(self) -> list[tuple]:
        return [h.normal for h in self.hyperplanes]

    def defining_polynomial(self) -> Polynomial:
        f = Polynomial.constant(1, self.n)
        for h in self.hyperplanes:
            f = f * h.linear_form()
        return f

    def to_text(self) -> str:
        lines = [f"dim {self.n}"]
        for h in self.hyperplanes:
            coeffs = [str(c) for c in h.normal]
            if h.constant:
                coeffs.append(str(h.constant))
            lines.append(" ".join(coeffs))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parsing

def _parse_row(line: str, n: int, lineno: int) -> Hyperplane:
    tokens = line.split()
    try:
        nums = [Fraction(t) for t in tokens]
    except ValueError:
        nums = None
    if nums is not None and "." not in line:
        if len(nums) not in (n, n + 1):
            raise ArrangementError(f"expected {n} or {n + 1} numbers, found {len(nums)}", lineno)
        const = nums[n] if len(nums) == n + 1 else Fraction(0)
        return Hyperplane(tuple(nums[:n]), const)
    if nums is not None:
        raise ArrangementError("decimal coefficients are not accepted; use p/q", lineno)
    try:
        p = parse_polynomial(line, n)
    except PolynomialSyntaxError as exc:
        raise ArrangementError(str(exc), lineno) from None
    if p.total_degree() > 1:
        raise ArrangementError("hyperplane equation must be linear", lineno)
    normal = tuple(p.coefficient(tuple(int(k == i) for k in range(n))) for i in range(n))
    return Hyperplane(normal, p.coefficient((0,) * n))


def parse_arrangement(text: str) -> Arrangement:
    """Parse the ``dim n`` + one-hyperplane-per-line format (numeric or symbolic rows)."""
    n = None
    hyperplanes = []
    linenos = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
                raise ArrangementError("first line must be 'dim <n>'", lineno)
            n = int(parts[1])
            if n < 1:
                raise ArrangementError("dimension must be positive", lineno)
            continue
        h = _parse_row(line, n, lineno)
        if not any(h.normal):
            raise ArrangementError("zero normal vector", lineno)
        hyperplanes.append(h)
        linenos.append(lineno)
    if n is None:
        raise ArrangementError("missing 'dim <n>' header")
    if not hyperplanes:
        raise ArrangementError("no hyperplanes given")
    keys = {}
    for h, ln in zip(hyperplanes, linenos):
        k = _projective_key(h.normal, h.constant)
        if k in keys:
            raise ArrangementError(f"duplicate hyperplane (rescaling of line {keys[k]})", ln)
        keys[k] = ln
    return Arrangement(n, tuple(hyperplanes))


# ---------------------------------------------------------------- lattice

@dataclass(frozen=True)
class Flat:
    subspace: Subspace
    hyperplane_set: frozenset

    @property
    def rank(self) -> int:
        return self.subspace.codim

    @property
    def mult(self) -> int:
        return len(self.hyperplane_set)

    # short aliases matching the usual r(W), s(W)
    r = rank
    s = mult

    def __repr__(self) -> str:
        return f"Flat(r={self.rank}, s={self.mult}, H={sorted(self.hyperplane_set)})"


@dataclass(frozen=True)
class IntersectionLattice:
    arrangement: Arrangement
    flats: tuple  # sorted by (rank, hyperplane indices); flats[0] is the ambient space

    @cached_property
    def proper_flats(self) -> tuple:
        return tuple(f for f in self.flats if f.rank > 0)

    @cached_property
    def _index(self) -> dict:
        return {f.subspace: i for i, f in enumerate(self.flats)}

    def index(self, flat: Flat) -> int:
        return self._index[flat.subspace]

    def find(self, subspace: Subspace) -> Flat | None:
        i = self._index.get(subspace)
        return None if i is None else self.flats[i]

    @property
    def top(self) -> Flat:
        return self.flats[0]

    @property
    def rank(self) -> int:
        return max(f.rank for f in self.flats)

    @property
    def is_essential(self) -> bool:
        return self.rank == self.arrangement.n

    def of_rank(self, r: int) -> list[Flat]:
        return [f for f in self.flats if f.rank == r]

    def contains(self, outer: Flat, inner: Flat) -> bool:
        """True iff inner is a subspace of outer."""
        return outer.hyperplane_set <= inner.hyperplane_set

    def above(self, w: Flat, proper: bool = True) -> list[Flat]:
        """Flats containing w (w included)."""
        pool = self.proper_flats if proper else self.flats
        return [f for f in pool if self.contains(f, w)]


def _closed_set(subspace: Subspace, normals: Sequence[tuple]) -> frozenset:
    return frozenset(i for i, h in enumerate(normals) if subspace.spans_form(h))


def build_lattice(arr: Arrangement) -> IntersectionLattice:
    """Breadth-first closure of {V, H_1..H_d} under intersection with hyperplanes."""
    if not arr.is_central:
        raise NotCentral("lattice needs a central arrangement; call localize() first")
    n = arr.n
    normals = arr.normals()
    hyper = [rref([h], n) for h in normals]
    top = Subspace.ambient(n)
    found = {top: None}
    frontier = [top]
    while frontier:
        nxt = []
        for s in frontier:
            for h in hyper:
                w = subspace_intersect(s, h)
                if w not in found:
                    found[w] = None
                    nxt.append(w)
        frontier = nxt
    flats = [Flat(s, _closed_set(s, normals)) for s in found]
    flats.sort(key=lambda f: (f.rank, sorted(f.hyperplane_set)))
    return IntersectionLattice(arr, tuple(flats))


# ---------------------------------------------------------------- transforms

def localize(arr: Arrangement, point: Sequence) -> Arrangement | None:
    """Central arrangement of the hyperplanes through ``point``, translated to the origin.

    Returns None when no hyperplane passes through the point.
    """
    point = as_covector(point)
    if len(point) != arr.n:
        raise DimensionError(f"point has {len(point)} coordinates, expected {arr.n}")
    keep = [i for i, h in enumerate(arr.hyperplanes) if h(point) == 0]
    if not keep:
        return None
    hs = tuple(Hyperplane(arr.hyperplanes[i].normal, Fraction(0)) for i in keep)
    labels = tuple(arr.labels[i] for i in keep) if arr.labels else None
    return Arrangement(arr.n, hs, labels)


def essentialize(arr: Arrangement) -> tuple[Arrangement, Subspace]:
    """Induced essential arrangement on a complement of the common intersection T.

    Coordinates on the quotient are the pivot coordinates of T's RREF normals;
    hyperplane order is preserved so hyperplane index sets match.
    """
    if not arr.is_central:
        raise NotCentral("essentialize needs a central arrangement")
    t = rref(arr.normals(), arr.n)
    piv = t.pivots
    rows = []
    for h in arr.normals():
        # h lies in the span of T's normals; its coordinates are its pivot entries
        rows.append(tuple(h[p] for p in piv))
    return Arrangement.from_normals(rows, labels=arr.labels), t


# ---------------------------------------------------------------- families

def _pencil_normals(s: int) -> list[tuple]:
    out = [(1, 0), (0, 1)]
    k = 1
    while len(out) < s:
        out.append((1, -k))
        if len(out) < s:
            out.append((1, k))
        k += 1
    return out[:s]


def is_generic(arr: Arrangement) -> bool:
    """Every k-subset (k <= n) of normals has rank k."""
    normals = arr.normals()
    for k in range(1, min(arr.n, arr.d) + 1):
        for sub in combinations(normals, k):
            if rank(list(sub), arr.n) != k:
                return False
    return True


def family(kind: str, n: int | None = None, d: int | None = None, s: int | None = None,
           seed: int = 0, box: int = 5, max_tries: int = 1000) -> Arrangement:
    """Standard arrangement families: generic, pencil, boolean, braid."""
    if kind == "boolean":
        if not n or n < 1:
            raise ValueError("boolean family needs n >= 1")
        return Arrangement.from_normals([[int(i == j) for j in range(n)] for i in range(n)])
    if kind == "braid":
        if not n or n < 2:
            raise ValueError("braid family needs n >= 2")
        rows = []
        for i, j in combinations(range(n), 2):
            v = [0] * n
            v[i], v[j] = 1, -1
            rows.append(v)
        return Arrangement.from_normals(rows)
    if kind == "pencil":
        if s is None or s < 2:
            raise ValueError("pencil family needs s >= 2 lines")
        return Arrangement.from_normals(_pencil_normals(s))
    if kind == "generic":
        if not n or d is None or n < 1 or d < n or (n == 1 and d > 1):
            raise ValueError("generic family needs d >= n >= 1 (and d = 1 when n = 1)")
        rng = random.Random(seed)
        for _ in range(max_tries):
            rows = [[rng.randint(-box, box) for _ in range(n)] for _ in range(d)]
            if any(not any(r) for r in rows):
                continue
            try:
                arr = Arrangement.from_normals(rows)
            except ArrangementError:
                continue
            if is_generic(arr):
                return arr
        raise RuntimeError("failed to sample a generic arrangement; enlarge the coefficient box")
    raise ValueError(f"unknown family {kind!r}")
