"""Multiplier ideals, log canonical thresholds and jumping numbers of arrangements.

For a central arrangement with lattice L and proper flats L', the multiplier
ideal at exponent lam is the intersection over W in L' of
I_W^(floor(lam*s(W)) - r(W) + 1), and its left limit (the ideal just below
lam) uses ceil(lam*s(W)) - r(W).  Everything here is exact in ``Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, Flat, IntersectionLattice, NotCentral, build_lattice, essentialize
from .ideal import (Ideal, flat_power_ideal, ideal_contains, ideal_equal, ideal_intersect, ideal_member,
                    degree_slices, truncated_intersection)
from .linalg import Subspace


class CrossCheckError(AssertionError):
    """Two independent computations of the same quantity disagreed."""


METHODS = ("compare", "cor2-global", "cor2-restricted")


def as_lambda(value) -> Fraction:
    lam = Fraction(value)
    if lam <= 0:
        raise ValueError(f"exponent must be positive, got {lam}")
    return lam


def _lattice(a: Arrangement | IntersectionLattice) -> IntersectionLattice:
    if isinstance(a, IntersectionLattice):
        return a
    if not a.is_central:
        raise NotCentral("multiplier ideals are computed for central arrangements; localize() first")
    return build_lattice(a)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def flat_exponent(w: Flat, lam, mode: str = "floor") -> int:
    if w.rank == 0:
        raise ValueError("the ambient space carries no exponent")
    lam = Fraction(lam)
    if mode == "floor":
        return _floor(lam * w.mult) - w.rank + 1
    if mode == "ceiling":
        return _ceil(lam * w.mult) - w.rank
    raise ValueError(f"unknown exponent mode {mode!r}")


@dataclass(frozen=True)
class FlatPowerIdeal:
    """Intersection of I_W^e over the listed (flat, e) terms; no terms means the unit ideal."""

    ambient_dim: int
    terms: tuple  # ((Flat, exponent), ...)

    @property
    def is_unit(self) -> bool:
        return not self.terms

    def exponents(self) -> dict:
        return {f.subspace: e for f, e in self.terms}

    def __repr__(self) -> str:
        inner = ", ".join(f"({f!r})^{e}" for f, e in self.terms)
        return f"FlatPowerIdeal[{inner or 'unit'}]"


def _flat_power_terms(lattice: IntersectionLattice, lam: Fraction, mode: str,
                      flats: Sequence[Flat] | None = None) -> FlatPowerIdeal:
    pool = lattice.proper_flats if flats is None else flats
    terms = []
    for w in pool:
        e = flat_exponent(w, lam, mode)
        if e > 0:
            terms.append((w, e))
    return FlatPowerIdeal(lattice.arrangement.n, tuple(terms))


def multiplier_ideal(a, lam) -> FlatPowerIdeal:
    lat = _lattice(a)
    return _flat_power_terms(lat, as_lambda(lam), "floor")


def left_limit_ideal(a, lam) -> FlatPowerIdeal:
    lat = _lattice(a)
    return _flat_power_terms(lat, as_lambda(lam), "ceiling")


def expand(fpi: FlatPowerIdeal, check_degree: int | None = None) -> Ideal:
    """Explicit generators of the intersection of flat powers.

    With ``check_degree`` the result is compared degree by degree against the
    linear-algebra intersection and a CrossCheckError raised on mismatch.
    """
    n = fpi.ambient_dim
    if fpi.is_unit:
        return Ideal.unit(n)
    parts = [flat_power_ideal(f.subspace, e) for f, e in fpi.terms]
    result = ideal_intersect(parts)
    if check_degree is not None:
        if not slices_agree(result, parts, check_degree):
            raise CrossCheckError(f"elimination and slice intersection disagree for {fpi!r}")
    return result


def slices_agree(result: Ideal, parts: Sequence[Ideal], degree_bound: int) -> bool:
    expected = truncated_intersection(parts, degree_bound)
    got = degree_slices(result, degree_bound)
    return all(expected[k] == got[k] for k in range(degree_bound + 1))


# ---------------------------------------------------------------- support and lct

@dataclass(frozen=True)
class Support:
    flats: tuple
    maximal: tuple


def support(a, lam) -> Support:
    lat = _lattice(a)
    lam = as_lambda(lam)
    flats = tuple(w for w in lat.proper_flats if lam * w.mult >= w.rank)
    maximal = tuple(w for w in flats if not any(v is not w and lat.contains(v, w) for v in flats))
    return Support(flats, maximal)


def lct(a, check: bool = True) -> Fraction:
    """min r(W)/s(W) over proper flats, cross-checked against the ideals themselves."""
    lat = _lattice(a)
    value = min(Fraction(w.rank, w.mult) for w in lat.proper_flats)
    if check:
        if multiplier_ideal(lat, value).is_unit:
            raise CrossCheckError(f"multiplier ideal is trivial at the computed threshold {value}")
        if not left_limit_ideal(lat, value).is_unit:
            raise CrossCheckError(f"multiplier ideal is already nontrivial below {value}")
    return value


# ---------------------------------------------------------------- jumping numbers

def candidate_jumping_numbers(a, up_to) -> list[tuple[Fraction, list[tuple[Flat, int]]]]:
    """Values (r(W)+m)/s(W) <= up_to with their witnesses (W, m), sorted."""
    lat = _lattice(a)
    up_to = Fraction(up_to)
    found: dict = {}
    for w in lat.proper_flats:
        m = 0
        while Fraction(w.rank + m, w.mult) <= up_to:
            found.setdefault(Fraction(w.rank + m, w.mult), []).append((w, m))
            m += 1
    return sorted(found.items())


def witnesses_for(lat: IntersectionLattice, lam: Fraction) -> list[tuple[Flat, int]]:
    out = []
    for w in lat.proper_flats:
        m = lam * w.mult - w.rank
        if m.denominator == 1 and m >= 0:
            out.append((w, int(m)))
    return out


@dataclass
class JumpingReport:
    value: Fraction
    is_jump: bool
    witnesses: list = field(default_factory=list)  # [(Flat, m)]
    methods: dict = field(default_factory=dict)    # method name -> bool
    certificates: dict = field(default_factory=dict)  # method -> witness index that showed the jump


def _jump_compare(lat: IntersectionLattice, lam: Fraction) -> bool:
    upper = multiplier_ideal(lat, lam)
    lower = left_limit_ideal(lat, lam)
    if upper.exponents() == lower.exponents():
        return False
    return not ideal_equal(expand(upper), expand(lower))


def _jump_cor2(lat: IntersectionLattice, lam: Fraction, restricted: bool):
    wits = witnesses_for(lat, lam)
    global_ideal = None
    for idx, (w, m) in enumerate(wits):
        if restricted:
            inter = expand(_flat_power_terms(lat, lam, "ceiling", lat.above(w)))
        else:
            if global_ideal is None:
                global_ideal = expand(left_limit_ideal(lat, lam))
            inter = global_ideal
        target = flat_power_ideal(w.subspace, m + 1)
        if not ideal_contains(target, inter):
            return True, idx
    return False, None


def is_jumping_number(a, lam, method: str = "compare") -> JumpingReport:
    """Decide whether lam is a jumping number; ``method='all'`` runs every method and
    raises CrossCheckError if they disagree."""
    lat = _lattice(a)
    lam = as_lambda(lam)
    methods = METHODS if method == "all" else (method,)
    report = JumpingReport(lam, False, witnesses_for(lat, lam))
    for meth in methods:
        if meth == "compare":
            report.methods[meth] = _jump_compare(lat, lam)
        elif meth in ("cor2-global", "cor2-restricted"):
            ok, idx = _jump_cor2(lat, lam, restricted=meth == "cor2-restricted")
            report.methods[meth] = ok
            if ok:
                report.certificates[meth] = idx
        else:
            raise ValueError(f"unknown method {meth!r}")
    verdicts = set(report.methods.values())
    if len(verdicts) > 1:
        raise CrossCheckError(f"jumping-number methods disagree at {lam}: {report.methods}")
    report.is_jump = verdicts.pop()
    return report


def jumping_numbers(a, up_to, method: str = "compare") -> list[JumpingReport]:
    lat = _lattice(a)
    up_to = Fraction(up_to)
    if up_to <= 0:
        raise ValueError("upper bound must be positive")
    out = []
    for lam, _ in candidate_jumping_numbers(lat, up_to):
        rep = is_jumping_number(lat, lam, method)
        if rep.is_jump:
            out.append(rep)
    return out


def set_theoretic_jumping(a) -> list[tuple[Fraction, list[Flat]]]:
    lat = _lattice(a)
    found: dict = {}
    for w in lat.proper_flats:
        ratio = Fraction(w.rank, w.mult)
        if all(ratio <= Fraction(v.rank, v.mult) for v in lat.above(w)):
            found.setdefault(ratio, []).append(w)
    return sorted(found.items())


# ---------------------------------------------------------------- closed forms

def origin_flat(n: int, d: int) -> Flat:
    return Flat(Subspace.origin(n), frozenset(range(d)))


def generic_oracle(n: int, d: int, lam) -> FlatPowerIdeal:
    """m^(floor(lam*d) - n + 1) for a generic arrangement of d >= n hyperplanes, lam <= 1."""
    lam = as_lambda(lam)
    if d < n:
        raise ValueError("generic closed form needs d >= n")
    if lam > 1:
        raise ValueError("generic closed form is stated for lam <= 1")
    e = _floor(lam * d) - n + 1
    if e <= 0:
        return FlatPowerIdeal(n, ())
    return FlatPowerIdeal(n, ((origin_flat(n, d), e),))


def codim2_jumps(lat: IntersectionLattice) -> set[Fraction]:
    """T_0: the values j/s(W), 2 <= j <= s(W)-1, over rank-2 flats."""
    return {Fraction(j, w.mult) for w in lat.of_rank(2) for j in range(2, w.mult)}


class CriterionError(ValueError):
    pass


def _rank3_lattice(a) -> IntersectionLattice:
    lat = _lattice(a)
    if lat.rank != 3:
        raise CriterionError(f"codim-3 criteria need a rank-3 arrangement, got rank {lat.rank}")
    if not lat.is_essential:
        ess, _ = essentialize(lat.arrangement)
        lat = build_lattice(ess)
    return lat


def codim3_criterion(a, j: int) -> bool:
    """Combinatorial prediction of whether j/d is a jumping number of a rank-3 arrangement.

    Points are the rank-2 flats (points of the projectivized line arrangement).
    """
    lat = _rank3_lattice(a)
    d = lat.arrangement.d
    if not 3 <= j <= d - 1 or j not in (3, 4, 5, d - 1):
        raise CriterionError(f"j must be one of 3, 4, 5, d-1 with 3 <= j <= d-1 (d={d}), got {j}")
    lam = Fraction(j, d)
    if lam in codim2_jumps(lat):
        raise CriterionError(f"{lam} is already a codim-2 jumping number")
    mults = [w.mult for w in lat.of_rank(2)]
    verdicts = []
    if j in (3, 4, 5):
        verdicts.append(all(Fraction(s) <= Fraction((j - 1) * d, j) for s in mults))
    if j == d - 1:
        verdicts.append(all(s != d - 1 for s in mults))
    if len(set(verdicts)) > 1:
        raise CrossCheckError(f"codim-3 criteria disagree for j={j}, d={d}")
    return verdicts[0]


def question_criterion(a, j: int) -> bool:
    """The conjectural test s(P) <= (j-1)d/j for all points, for any 3 <= j <= d-1."""
    lat = _rank3_lattice(a)
    d = lat.arrangement.d
    return all(Fraction(w.mult) <= Fraction((j - 1) * d, j) for w in lat.of_rank(2))


def question_experiment(a) -> list[dict]:
    """Compare the conjectural criterion with actual jumping for every admissible j."""
    lat = _rank3_lattice(a)
    d = lat.arrangement.d
    t0 = codim2_jumps(lat)
    rows = []
    for j in range(3, d):
        lam = Fraction(j, d)
        if lam in t0:
            continue
        actual = is_jumping_number(lat, lam, "compare").is_jump
        rows.append({"j": j, "lambda": lam, "predicted": question_criterion(lat, j),
                     "actual": actual, "proved": j in (3, 4, 5, d - 1)})
    return rows
