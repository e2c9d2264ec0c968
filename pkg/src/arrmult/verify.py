"""Oracle suites: each check compares two independent computations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, IntersectionLattice, build_lattice, family
from .ideal import Ideal, flat_ideal, flat_power_ideal, ideal_equal, ideal_member, ideal_power, \
    vanishing_order_along
from .linalg import Subspace, rref
from .multiplier import (METHODS, candidate_jumping_numbers, expand, generic_oracle, is_jumping_number,
                         multiplier_ideal, slices_agree)
from .poly import Polynomial, monomials_of_degree


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_subspace(rng: random.Random, n: int, box: int = 3) -> Subspace:
    while True:
        r = rng.randint(1, n)
        w = rref([[rng.randint(-box, box) for _ in range(n)] for _ in range(r)], n)
        if w.codim:
            return w


def random_polynomial(rng: random.Random, n: int, degree: int, nterms: int = 4, box: int = 5) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        k = rng.randint(0, degree)
        e = rng.choice(monomials_of_degree(n, k))
        terms[e] = terms.get(e, 0) + rng.randint(-box, box)
    return Polynomial(terms, n)


def membership_sample(rng: random.Random, n_max: int = 4, deg_max: int = 6, k_max: int = 5):
    """A random (g, W, k); g is built to sit near the boundary of I_W^k."""
    n = rng.randint(1, n_max)
    w = random_subspace(rng, n)
    k = rng.randint(1, k_max)
    forms = [Polynomial.linear(row) for row in w.normals]
    g = Polynomial.zero(n)
    for _ in range(rng.randint(1, 3)):
        j = rng.choice([k - 1, k, k]) if k <= deg_max else deg_max
        j = max(0, min(j, deg_max))
        t = Polynomial.constant(rng.randint(1, 4) * rng.choice([-1, 1]), n)
        for _ in range(j):
            t = t * rng.choice(forms)
        t = t * random_polynomial(rng, n, deg_max - j, nterms=2)
        g = g + t
    if rng.random() < 0.25:
        g = g + random_polynomial(rng, n, deg_max, nterms=2)
    return g, w, k


def check_membership(trials: int = 1000, seed: int = 1) -> list[CheckResult]:
    rng = random.Random(seed)
    failures = []
    members = 0
    for t in range(trials):
        g, w, k = membership_sample(rng)
        power = ideal_power(flat_ideal(w), k)
        by_gb = ideal_member(g, Ideal(power.generators, w.ambient_dim))
        by_order = vanishing_order_along(g, w) >= k
        members += by_gb
        if by_gb != by_order:
            failures.append(f"trial {t}: g={g}, W={w}, k={k}: groebner={by_gb}, order={by_order}")
    detail = f"{trials} trials, {members} members" if not failures else failures[0]
    return [CheckResult("membership: groebner vs vanishing order", not failures, detail)]


def check_truncation(lat: IntersectionLattice, up_to=1, degree: int = 8) -> list[CheckResult]:
    failures = []
    count = 0
    for lam, _ in candidate_jumping_numbers(lat, up_to):
        fpi = multiplier_ideal(lat, lam)
        if fpi.is_unit:
            continue
        parts = [flat_power_ideal(w.subspace, e) for w, e in fpi.terms]
        count += 1
        if not slices_agree(expand(fpi), parts, degree):
            failures.append(f"lambda={lam}")
    detail = f"{count} instances up to degree {degree}" if not failures else ", ".join(failures)
    return [CheckResult("truncation: elimination vs slice intersection", not failures, detail)]


def check_methods(lat: IntersectionLattice, up_to=1) -> list[CheckResult]:
    failures = []
    cands = candidate_jumping_numbers(lat, up_to)
    for lam, _ in cands:
        verdicts = {m: is_jumping_number(lat, lam, m).is_jump for m in METHODS}
        if len(set(verdicts.values())) != 1:
            failures.append(f"lambda={lam}: {verdicts}")
    detail = f"{len(cands)} candidates" if not failures else "; ".join(failures)
    return [CheckResult("methods: compare / cor2-global / cor2-restricted agree", not failures, detail)]


def check_generic(n: int, d: int, seed: int = 0) -> list[CheckResult]:
    """Closed form m^(floor(lam d)-n+1) below 1; the principal ideal (f) at lam = 1."""
    arr = family("generic", n=n, d=d, seed=seed)
    lat = build_lattice(arr)
    below, at_one = [], []
    for lam, _ in candidate_jumping_numbers(lat, 1):
        got = expand(multiplier_ideal(lat, lam))
        if lam < 1:
            if not ideal_equal(got, expand(generic_oracle(n, d, lam))):
                below.append(str(lam))
        elif not ideal_equal(got, Ideal([arr.defining_polynomial()], n)):
            at_one.append(str(lam))
    return [
        CheckResult(f"generic n={n} d={d} seed={seed}: closed form for lambda < 1", not below, ", ".join(below)),
        CheckResult(f"generic n={n} d={d} seed={seed}: I(f^1) = (f)", not at_one, ", ".join(at_one)),
    ]
