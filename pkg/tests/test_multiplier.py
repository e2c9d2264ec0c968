import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from arrmult import (Arrangement, Ideal, build_lattice, candidate_jumping_numbers, codim3_criterion,
                     essentialize, expand, family, flat_exponent, generic_oracle, ideal_contains, ideal_equal,
                     is_jumping_number, jumping_numbers, lct, left_limit_ideal, localize, multiplier_ideal,
                     parse_arrangement, parse_polynomial, set_theoretic_jumping, support)
from arrmult.arrangement import Flat, NotCentral
from arrmult.linalg import Subspace, rref
from arrmult.multiplier import (METHODS, CriterionError, FlatPowerIdeal, codim2_jumps, question_experiment,
                                witnesses_for)

from helpers import near_pencil, rank3_configurations, single_hyperplane, two_pencil
from test_arrangement import central_arrangements

F = Fraction


def flat(rank, mult, n=3):
    rows = [[int(i == j) for j in range(n)] for i in range(rank)]
    return Flat(rref(rows, n) if rows else Subspace.ambient(n), frozenset(range(mult)))


def terms(lat, fpi):
    return [(w.rank, w.mult, e) for w, e in fpi.terms]


def test_flat_exponent_examples():
    assert flat_exponent(flat(2, 3), F(2, 3), "floor") == 1
    assert flat_exponent(flat(1, 1), 1, "floor") == 1
    assert flat_exponent(flat(2, 3), F(2, 3), "ceiling") == 0
    with pytest.raises(ValueError):
        flat_exponent(flat(0, 0), 1)


def test_multiplier_ideal_examples():
    p3 = build_lattice(family("pencil", s=3))
    assert terms(p3, multiplier_ideal(p3, F(2, 3))) == [(2, 3, 1)]
    h = build_lattice(single_hyperplane(2))
    assert terms(h, multiplier_ideal(h, F(3, 2))) == [(1, 1, 1)]
    p4 = build_lattice(family("pencil", s=4))
    fpi = multiplier_ideal(p4, F(3, 4))
    assert terms(p4, fpi) == [(2, 4, 2)]
    assert ideal_equal(expand(fpi), Ideal([parse_polynomial(g, 2) for g in ("x^2", "x*y", "y^2")], 2))


def test_multiplier_rejects_affine():
    with pytest.raises(NotCentral):
        multiplier_ideal(parse_arrangement("dim 2\nx\ny - 1\n"), 1)


def test_left_limit_examples():
    p3 = build_lattice(family("pencil", s=3))
    assert left_limit_ideal(p3, F(2, 3)).is_unit
    assert terms(p3, left_limit_ideal(p3, 1)) == [(2, 3, 1)]
    assert left_limit_ideal(p3, F(3, 4)) == multiplier_ideal(p3, F(3, 4))


def test_support_examples():
    p3 = build_lattice(family("pencil", s=3))
    sup = support(p3, F(2, 3))
    assert [(w.rank, w.mult) for w in sup.flats] == [(2, 3)]
    assert support(p3, F(1, 2)).flats == ()
    sup = support(p3, 1)
    assert len(sup.flats) == 4
    assert sorted(w.rank for w in sup.maximal) == [1, 1, 1]


def test_lct_examples():
    assert lct(family("pencil", s=3)) == F(2, 3)
    assert lct(single_hyperplane(3)) == 1
    assert lct(family("braid", n=4)) == F(1, 2)
    assert lct(family("boolean", n=3)) == 1


def test_candidates_examples():
    assert [v for v, _ in candidate_jumping_numbers(family("pencil", s=3), 1)] == [F(2, 3), 1]
    assert [v for v, _ in candidate_jumping_numbers(family("pencil", s=4), 1)] == [F(1, 2), F(3, 4), 1]
    assert [v for v, _ in candidate_jumping_numbers(single_hyperplane(), 2)] == [1, 2]


def test_is_jumping_examples():
    p3 = family("pencil", s=3)
    assert is_jumping_number(p3, F(2, 3), "all").is_jump
    rep = is_jumping_number(p3, F(1, 2), "all")
    assert not rep.is_jump and rep.witnesses == []
    g6 = family("generic", n=3, d=6, seed=11)
    assert is_jumping_number(g6, F(1, 2), "all").is_jump


def test_jumping_numbers_examples():
    for s in (3, 5):
        got = [r.value for r in jumping_numbers(family("pencil", s=s), 1)]
        assert got == sorted({F(2 + m, s) for m in range(s - 1)} | {F(1)})
    assert [r.value for r in jumping_numbers(single_hyperplane(), 3)] == [1, 2, 3]
    assert [r.value for r in jumping_numbers(family("pencil", s=3), 2)] == [F(2, 3), 1, F(5, 3), 2]


def test_report_witnesses_satisfy_identity():
    lat = build_lattice(two_pencil(4, 4))
    for rep in jumping_numbers(lat, 1, "all"):
        assert rep.witnesses
        for w, m in rep.witnesses:
            assert F(w.rank + m, w.mult) == rep.value
        assert set(rep.methods) == set(METHODS)


def test_set_theoretic_examples():
    p3 = set_theoretic_jumping(family("pencil", s=3))
    assert [(v, sorted(w.rank for w in ws)) for v, ws in p3] == [(F(2, 3), [2]), (1, [1, 1, 1])]
    boolean = set_theoretic_jumping(family("boolean", n=2))
    assert [(v, sorted(w.rank for w in ws)) for v, ws in boolean] == [(1, [1, 1, 2])]
    assert [v for v, _ in set_theoretic_jumping(single_hyperplane())] == [1]


def test_generic_oracle_examples():
    assert [e for _, e in generic_oracle(2, 4, F(3, 4)).terms] == [2]
    assert [e for _, e in generic_oracle(3, 6, F(1, 2)).terms] == [1]
    assert generic_oracle(2, 3, F(1, 3)).is_unit
    with pytest.raises(ValueError):
        generic_oracle(2, 3, F(3, 2))


@pytest.mark.parametrize("n, d, seed", [(2, 4, 0), (2, 5, 1), (3, 4, 2), (3, 6, 0)])
def test_generic_closed_form_below_one_and_principal_at_one(n, d, seed):
    arr = family("generic", n=n, d=d, seed=seed)
    lat = build_lattice(arr)
    for lam, _ in candidate_jumping_numbers(lat, 1):
        got = expand(multiplier_ideal(lat, lam))
        if lam < 1:
            assert ideal_equal(got, expand(generic_oracle(n, d, lam)))
        else:
            principal = Ideal([arr.defining_polynomial()], n)
            assert ideal_equal(got, principal)
            assert not ideal_equal(got, expand(generic_oracle(n, d, lam)))


def test_expand_examples():
    origin = Flat(Subspace.origin(2), frozenset({0, 1}))
    assert ideal_equal(expand(FlatPowerIdeal(2, ((origin, 1),))), Ideal([parse_polynomial("x", 2),
                                                                       parse_polynomial("y", 2)], 2))
    assert expand(FlatPowerIdeal(2, ())).is_unit()
    line = Flat(rref([(1, -1, 0), (0, 1, -1)]), frozenset({0, 1, 2}))
    plane = Flat(rref([(1, -1, 0)]), frozenset({0}))
    got = expand(FlatPowerIdeal(3, ((line, 1), (plane, 1))), check_degree=4)
    assert ideal_equal(got, Ideal([parse_polynomial("x - y", 3)], 3))


def test_codim3_examples():
    assert codim3_criterion(family("generic", n=3, d=6, seed=11), 3)
    assert not codim3_criterion(near_pencil(5), 3)
    np6 = near_pencil(6)  # a point of multiplicity d - 1 = 6
    assert not codim3_criterion(np6, 6)
    assert codim3_criterion(two_pencil(5, 3), 5)  # the conic case: P1, P2 with s > 3d/5, 2d/5


def test_codim3_errors():
    with pytest.raises(CriterionError):
        codim3_criterion(family("generic", n=3, d=8, seed=1), 6)  # j not in {3, 4, 5, d-1}
    with pytest.raises(CriterionError):
        codim3_criterion(two_pencil(4, 3), 3)  # 3/6 = 2/4 lies in T_0
    with pytest.raises(CriterionError):
        codim3_criterion(family("pencil", s=4), 3)


def test_codim3_accepts_non_essential_rank3():
    braid = family("braid", n=4)
    assert codim3_criterion(braid, 3) == is_jumping_number(braid, F(1, 2), "all").is_jump


def test_question_harness_agrees_where_proved():
    for name, arr in rank3_configurations().items():
        for row in question_experiment(arr):
            if row["proved"]:
                assert row["predicted"] == row["actual"], (name, row)


def test_localized_multiplier_ideal():
    affine = parse_arrangement("dim 2\nx\ny - 1\nx + y - 1\n")
    loc = localize(affine, (0, 1))
    assert loc.d == 3 and lct(loc) == F(2, 3)
    assert localize(affine, (5, 5)) is None


# ---------------------------------------------------------------- properties

@settings(max_examples=60, deadline=None)
@given(central_arrangements(max_n=3, max_d=5), st.fractions(min_value=F(1, 50), max_value=3))
def test_off_candidate_values_are_not_jumps(arr, lam):
    lat = build_lattice(arr)
    assume(lam > 0 and not witnesses_for(lat, lam))
    assert multiplier_ideal(lat, lam) == left_limit_ideal(lat, lam)
    assert not is_jumping_number(lat, lam, "compare").is_jump


@settings(max_examples=40, deadline=None)
@given(central_arrangements(max_n=3, max_d=5))
def test_locally_constant_between_candidates(arr):
    lat = build_lattice(arr)
    cands = [F(0)] + [v for v, _ in candidate_jumping_numbers(lat, 2)]
    for lo, hi in zip(cands, cands[1:]):
        inside = [lo + (hi - lo) * F(k, 4) for k in (1, 2, 3)]
        ref = multiplier_ideal(lat, inside[0])
        assert all(multiplier_ideal(lat, t) == ref for t in inside[1:])
        assert left_limit_ideal(lat, hi) == ref
        if lo > 0:
            assert multiplier_ideal(lat, lo) == ref


@settings(max_examples=25, deadline=None)
@given(central_arrangements(max_n=3, max_d=5))
def test_methods_agree_and_sandwich(arr):
    lat = build_lattice(arr)
    for lam, _ in candidate_jumping_numbers(lat, 1):
        rep = is_jumping_number(lat, lam, "all")  # raises on disagreement
        upper, lower = expand(multiplier_ideal(lat, lam)), expand(left_limit_ideal(lat, lam))
        assert ideal_contains(lower, upper)
        assert rep.is_jump == (not ideal_equal(lower, upper))


@settings(max_examples=30, deadline=None)
@given(central_arrangements(max_n=3, max_d=5))
def test_triviality_below_lct(arr):
    lat = build_lattice(arr)
    c = lct(lat)
    assert c <= 1
    assert not expand(multiplier_ideal(lat, c)).is_unit()
    assert expand(left_limit_ideal(lat, c)).is_unit()
    assert c == min(r.value for r in jumping_numbers(lat, 1))


@settings(max_examples=30, deadline=None)
@given(central_arrangements(max_n=3, max_d=5))
def test_essentialization_invariance(arr):
    ess, _ = essentialize(arr)
    a, b = build_lattice(arr), build_lattice(ess)
    assert lct(a) == lct(b)
    lams = [v for v, _ in candidate_jumping_numbers(a, 1)]
    assert lams == [v for v, _ in candidate_jumping_numbers(b, 1)]
    for lam in lams:
        ea = sorted((tuple(sorted(w.hyperplane_set)), e) for w, e in multiplier_ideal(a, lam).terms)
        eb = sorted((tuple(sorted(w.hyperplane_set)), e) for w, e in multiplier_ideal(b, lam).terms)
        assert ea == eb


def _point_on(rng, w):
    coeffs = [(F(rng.randint(-5, 5)), v) for v in w.basis()]
    return tuple(sum((c * v[i] for c, v in coeffs), F(0)) for i in range(w.ambient_dim))


@settings(max_examples=30, deadline=None)
@given(central_arrangements(max_n=3, max_d=5), st.integers(0, 10_000))
def test_support_consistency(arr, seed):
    rng = random.Random(seed)
    lat = build_lattice(arr)
    for lam, _ in candidate_jumping_numbers(lat, F(3, 2)):
        gens = expand(multiplier_ideal(lat, lam)).generators
        sup = support(lat, lam)
        for w in sup.flats:
            pt = _point_on(rng, w.subspace)
            assert all(g(pt) == 0 for g in gens)
        for _ in range(3):
            pt = tuple(F(rng.randint(-50, 50)) for _ in range(arr.n))
            if any(w.subspace.contains_point(pt) for w in sup.flats):
                continue
            assert any(g(pt) != 0 for g in gens)
