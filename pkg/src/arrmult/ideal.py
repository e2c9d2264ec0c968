"""Polynomial ideals over Q: Groebner bases, powers, intersections, membership.

Internally the Buchberger loop works on plain ``dict`` term maps; the public
surface speaks :class:`~arrmult.poly.Polynomial` and :class:`Ideal`.
"""

from __future__ import annotations

import heapq
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .linalg import Subspace, adapted_basis, inverse, nullspace, rref_matrix
from .poly import GREVLEX, MonomialOrder, Polynomial, block_order, monomials_of_degree


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its configured resource limit."""


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_pairs: int = 200_000
    max_terms: int = 50_000


BUDGET_PROFILES = {
    "small": Budget(max_pairs=5_000, max_terms=5_000),
    "default": Budget(),
    "large": Budget(max_pairs=5_000_000, max_terms=1_000_000),
}

_budget = BUDGET_PROFILES[os.environ.get("ARRMULT_BUDGET", "default")] \
    if os.environ.get("ARRMULT_BUDGET", "default") in BUDGET_PROFILES else Budget()


def set_budget(budget: Budget | str) -> Budget:
    """Install a process-wide budget; returns the previous one."""
    global _budget
    old = _budget
    _budget = BUDGET_PROFILES[budget] if isinstance(budget, str) else budget
    return old


def get_budget() -> Budget:
    return _budget


# ---------------------------------------------------------------- Buchberger core

def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Basis:
    """Monic polynomials with cached leading exponents under one order."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.polys: list[dict] = []
        self.lts: list[tuple] = []

    def lead(self, p: dict) -> tuple:
        return max(p, key=self.order.key)

    def add(self, p: dict) -> int:
        lt = self.lead(p)
        c = p[lt]
        if c != 1:
            inv = 1 / c
            p = {e: v * inv for e, v in p.items()}
        self.polys.append(p)
        self.lts.append(lt)
        return len(self.polys) - 1


def _reduce(p: dict, basis: _Basis, active: Sequence[int], budget: Budget) -> dict:
    """Full normal form of p modulo the active basis elements."""
    key = basis.order.key
    p = dict(p)
    rem: dict = {}
    heap = [(tuple(-k for k in key(e)), e) for e in p]
    heapq.heapify(heap)
    queued = set(p)
    divisors = [(basis.lts[i], basis.polys[i]) for i in active]
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        for lt, g in divisors:
            if _divides(lt, m):
                q = tuple(a - b for a, b in zip(m, lt))
                for e, cg in g.items():
                    if e == lt:
                        continue
                    e2 = tuple(a + b for a, b in zip(e, q))
                    v = p.get(e2, 0) - c * cg
                    if v:
                        p[e2] = v
                        if e2 not in queued:
                            queued.add(e2)
                            heapq.heappush(heap, (tuple(-k for k in key(e2)), e2))
                    else:
                        p.pop(e2, None)
                if len(p) > budget.max_terms:
                    raise BudgetExceeded(f"intermediate polynomial exceeded {budget.max_terms} terms")
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: dict, lf: tuple, g: dict, lg: tuple) -> dict:
    l = _lcm(lf, lg)
    qf = tuple(a - b for a, b in zip(l, lf))
    qg = tuple(a - b for a, b in zip(l, lg))
    out: dict = {}
    for e, c in f.items():
        e2 = tuple(a + b for a, b in zip(e, qf))
        out[e2] = out.get(e2, 0) + c
    for e, c in g.items():
        e2 = tuple(a + b for a, b in zip(e, qg))
        v = out.get(e2, 0) - c
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return {e: c for e, c in out.items() if c}


def _update(basis: _Basis, active: list[int], pairs: dict, h: int) -> list[int]:
    """Gebauer-Moeller installation of a new element h (coprime + chain criteria)."""
    lts = basis.lts
    lh = lts[h]
    cand = [(g, _lcm(lh, lts[g])) for g in active]
    kept: list = []
    for i, (g, l) in enumerate(cand):
        if _coprime(lh, lts[g]) or not any(
                _divides(l2, l) for _, l2 in cand[i + 1:]) and not any(_divides(l2, l) for _, l2 in kept):
            kept.append((g, l))
    for (a, b), l in list(pairs.items()):
        if _divides(lh, l) and _lcm(lts[a], lh) != l and _lcm(lts[b], lh) != l:
            del pairs[(a, b)]
    for g, l in kept:
        if not _coprime(lh, lts[g]):
            pairs[(g, h)] = l
    return [g for g in active if not _divides(lh, lts[g])] + [h]


def _groebner_dicts(polys: Iterable[dict], order: MonomialOrder, budget: Budget) -> list[dict]:
    basis = _Basis(order)
    active: list[int] = []
    pairs: dict = {}
    start = [p for p in polys if p]
    start.sort(key=lambda p: order.key(max(p, key=order.key)))
    for p in start:
        r = _reduce(p, basis, active, budget)
        if r:
            h = basis.add(r)
            active = _update(basis, active, pairs, h)
    done = 0
    key = order.key
    while pairs:
        (a, b) = min(pairs, key=lambda ab: (key(pairs[ab]), ab))
        del pairs[(a, b)]
        done += 1
        if done > budget.max_pairs:
            raise BudgetExceeded(f"S-pair budget of {budget.max_pairs} exhausted")
        s = _spoly(basis.polys[a], basis.lts[a], basis.polys[b], basis.lts[b])
        if not s:
            continue
        r = _reduce(s, basis, active, budget)
        if r:
            h = basis.add(r)
            active = _update(basis, active, pairs, h)
    return _interreduce([basis.polys[i] for i in active], order, budget)


def _interreduce(polys: list[dict], order: MonomialOrder, budget: Budget) -> list[dict]:
    """Reduced Groebner basis from any Groebner basis."""
    key = order.key
    items = []
    for p in polys:
        if p:
            lt = max(p, key=key)
            items.append((lt, p))
    items.sort(key=lambda t: key(t[0]))
    minimal = []
    for i, (lt, p) in enumerate(items):
        if any(_divides(lt2, lt) and (lt2 != lt or j < i) for j, (lt2, _) in enumerate(items) if j != i):
            continue
        minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = _Basis(order)
        for j, q in enumerate(minimal):
            if j != i:
                others.add(q)
        lt = max(p, key=key)
        c = p[lt]
        tail = {e: v for e, v in p.items() if e != lt}
        tail = _reduce(tail, others, list(range(len(others.polys))), budget)
        red = {lt: Fraction(1)}
        for e, v in tail.items():
            red[e] = v / c
        out.append(red)
    out.sort(key=lambda p: key(max(p, key=key)), reverse=True)
    return out


# ---------------------------------------------------------------- ideals

class Ideal:
    """A finitely generated ideal of Q[x_1..x_n] with a per-order Groebner cache."""

    def __init__(self, generators: Iterable[Polynomial], nvars: int, gb: dict | None = None):
        gens = tuple(g for g in generators if not g.is_zero())
        if any(g.nvars != nvars for g in gens):
            raise ValueError("generator lives in a different ring")
        self.generators = gens
        self.nvars = nvars
        self._gb: dict = dict(gb or {})
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, n: int) -> "Ideal":
        one = Polynomial.constant(1, n)
        return cls([one], n, gb={GREVLEX: (one,)})

    @classmethod
    def zero(cls, n: int) -> "Ideal":
        return cls([], n, gb={GREVLEX: ()})

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple[Polynomial, ...]:
        with self._lock:
            if order not in self._gb:
                self._gb[order] = groebner(self.generators, order, nvars=self.nvars)
            return self._gb[order]

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __contains__(self, g: Polynomial) -> bool:
        return ideal_member(g, self)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def groebner(generators: Sequence[Polynomial] | Ideal, order: MonomialOrder = GREVLEX,
             nvars: int | None = None) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis (monic, sorted by decreasing leading term)."""
    if isinstance(generators, Ideal):
        return generators.groebner(order)
    gens = [g for g in generators if not g.is_zero()]
    if nvars is None:
        if not gens:
            raise ValueError("nvars required for an empty generator list")
        nvars = gens[0].nvars
    if nvars < 1:
        raise ValueError("at least one variable required")
    if any(g.is_constant() for g in gens):
        return (Polynomial.constant(1, nvars),)
    basis = _groebner_dicts([dict(g.terms) for g in gens], order, _budget)
    return tuple(Polynomial(p, nvars) for p in basis)


def normal_form(g: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    b = _Basis(order)
    for p in basis:
        b.add(dict(p.terms))
    return Polynomial(_reduce(dict(g.terms), b, list(range(len(b.polys))), _budget), g.nvars)


def ideal_member(g: Polynomial, ideal: Ideal) -> bool:
    if g.is_zero():
        return True
    return normal_form(g, ideal.groebner(GREVLEX)).is_zero()


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """True iff ``small`` is a subset of ``big``."""
    if big.nvars != small.nvars:
        raise ValueError("ideals live in different rings")
    gb = big.groebner(GREVLEX)
    if len(gb) == 1 and gb[0].is_constant():
        return True
    b = _Basis(GREVLEX)
    for p in gb:
        b.add(dict(p.terms))
    act = list(range(len(b.polys)))
    return all(not _reduce(dict(g.terms), b, act, _budget) for g in small.generators)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return ideal_contains(a, b) and ideal_contains(b, a)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    return Ideal([f * g for f in a.generators for g in b.generators], a.nvars)


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError("ideal power must be nonnegative")
    n = ideal.nvars
    if k == 0:
        return Ideal.unit(n)
    gens = ideal.generators
    prods = []
    for combo in combinations_with_replacement(range(len(gens)), k):
        p = Polynomial.constant(1, n)
        for i in combo:
            p = p * gens[i]
        prods.append(p)
    return Ideal(prods, n)


def flat_ideal(w: Subspace) -> Ideal:
    """I_W, generated by the canonical normals of W."""
    return flat_power_ideal(w, 1)


def flat_power_ideal(w: Subspace, k: int) -> Ideal:
    """I_W^k with a Groebner basis attached without running Buchberger.

    With RREF normals l_1..l_r the leading terms under grevlex are distinct
    pivot variables, so the k-fold products have leading terms generating
    (x_p)^k; both ideals have the Hilbert function of (y_1..y_r)^k, hence the
    products already form a Groebner basis and only interreduction is needed.
    """
    n = w.ambient_dim
    if k <= 0 or w.codim == 0:
        return Ideal.unit(n)
    forms = [Polynomial.linear(row) for row in w.normals]
    prods = []
    for combo in combinations_with_replacement(range(len(forms)), k):
        p = Polynomial.constant(1, n)
        for i in combo:
            p = p * forms[i]
        prods.append(p)
    gb = _interreduce([dict(p.terms) for p in prods], GREVLEX, _budget)
    return Ideal(prods, n, gb={GREVLEX: tuple(Polynomial(p, n) for p in gb)})


def _intersect_pair(a: Ideal, b: Ideal) -> Ideal:
    n = a.nvars
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    if ideal_contains(b, a):
        return a
    if ideal_contains(a, b):
        return b
    t = Polynomial.var(0, n + 1)
    one_minus_t = 1 - t
    gens = [t * g.extend(1) for g in a.groebner(GREVLEX)]
    gens += [one_minus_t * g.extend(1) for g in b.groebner(GREVLEX)]
    basis = _groebner_dicts([dict(g.terms) for g in gens], block_order(1), _budget)
    kept = [Polynomial({e[1:]: c for e, c in p.items()}, n) for p in basis if all(e[0] == 0 for e in p)]
    # elimination basis restricted to x is already a reduced grevlex basis
    kept = tuple(sorted(kept, key=lambda p: GREVLEX.key(p.leading()[0]), reverse=True))
    return Ideal(kept, n, gb={GREVLEX: kept})


def ideal_intersect(ideals: Sequence[Ideal]) -> Ideal:
    """Intersection by pairwise elimination folds, smallest generator count first."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersection of an empty family")
    n = ideals[0].nvars
    if any(i.nvars != n for i in ideals):
        raise ValueError("ideals live in different rings")
    ideals.sort(key=lambda i: len(i.generators))
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = _intersect_pair(acc, nxt)
    return acc


# ---------------------------------------------------------------- oracles

def _to_new_coordinates(g: Polynomial, w: Subspace) -> Polynomial:
    m = adapted_basis(w)
    return g.substitute_linear(inverse(m))


def vanishing_order_along(g: Polynomial, w: Subspace) -> float | int:
    """Order of vanishing of g along the linear subspace w (inf for g = 0)."""
    if w.codim == 0:
        raise ValueError("vanishing order along the ambient space is undefined")
    if g.is_zero():
        return float("inf")
    h = _to_new_coordinates(g, w)
    r = w.codim
    return min(sum(e[:r]) for e in h.terms)


def _slice(ideal_gens: Sequence[Polynomial], n: int, k: int, monos: list[tuple]) -> list[tuple]:
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in ideal_gens:
        dg = g.total_degree()
        if dg > k:
            continue
        for q in monomials_of_degree(n, k - dg):
            row = [Fraction(0)] * len(monos)
            for e, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(e, q))]] = c
            rows.append(row)
    if not rows:
        return []
    return rref_matrix(rows, len(monos))[0]


def degree_slices(ideal: Ideal, degree_bound: int) -> dict[int, list[Polynomial]]:
    """RREF bases of the homogeneous components I_k for 0 <= k <= degree_bound."""
    if not ideal.is_homogeneous():
        raise NotHomogeneous("degree slices need homogeneous generators")
    n = ideal.nvars
    out = {}
    for k in range(degree_bound + 1):
        monos = monomials_of_degree(n, k)
        rows = _slice(ideal.generators, n, k, monos)
        out[k] = [Polynomial({m: c for m, c in zip(monos, row)}, n) for row in rows]
    return out


def truncated_intersection(ideals: Sequence[Ideal], degree_bound: int) -> dict[int, list[Polynomial]]:
    """Per-degree bases of the intersection, by exact linear algebra on slices.

    The intersection of row spaces is the annihilator of the sum of the
    annihilators.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersection of an empty family")
    n = ideals[0].nvars
    for ideal in ideals:
        if not ideal.is_homogeneous():
            raise NotHomogeneous("truncated intersection needs homogeneous ideals")
    out = {}
    for k in range(degree_bound + 1):
        monos = monomials_of_degree(n, k)
        size = len(monos)
        annihilators = []
        for ideal in ideals:
            rows = _slice(ideal.generators, n, k, monos)
            annihilators.extend(nullspace(rows, size) if rows else
                                [tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)])
        inter = nullspace(annihilators, size) if annihilators else \
            [tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)]
        basis = rref_matrix(inter, size)[0] if inter else []
        out[k] = [Polynomial({m: c for m, c in zip(monos, row)}, n) for row in basis]
    return out
