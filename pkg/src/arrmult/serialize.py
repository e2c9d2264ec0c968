"""JSON-ready views of lattices, flat-power ideals and jumping reports."""

from __future__ import annotations

import json
from fractions import Fraction

from .arrangement import Flat, IntersectionLattice
from .ideal import Ideal
from .multiplier import FlatPowerIdeal, JumpingReport
from .poly import Polynomial, default_names


def frac(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def flat_json(lat: IntersectionLattice, w: Flat) -> dict:
    return {
        "id": lat.index(w),
        "rank": w.rank,
        "mult": w.mult,
        "hyperplanes": sorted(w.hyperplane_set),
        "normals": [[frac(c) for c in row] for row in w.subspace.normals],
    }


def lattice_json(lat: IntersectionLattice) -> dict:
    return {
        "ambient_dim": lat.arrangement.n,
        "hyperplanes": lat.arrangement.d,
        "flats": [flat_json(lat, w) for w in lat.flats],
    }


def fpi_json(lat: IntersectionLattice, fpi: FlatPowerIdeal) -> list:
    return [[lat.index(w), e] for w, e in fpi.terms]


def poly_str(p: Polynomial) -> str:
    return p.to_string(default_names(p.nvars))


def ideal_json(ideal: Ideal) -> list[str]:
    return [poly_str(g) for g in ideal.groebner()]


def report_json(lat: IntersectionLattice, rep: JumpingReport) -> dict:
    return {
        "value": frac(rep.value),
        "jumping": rep.is_jump,
        "witnesses": [{"flat": lat.index(w), "m": m} for w, m in rep.witnesses],
        "methods": dict(sorted(rep.methods.items())),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
