from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrmult.linalg import (DimensionError, Subspace, adapted_basis, inverse, mat_vec, rank, rref,
                            subspace_contains, subspace_intersect)

F = Fraction


def test_rref_identity_and_collapse():
    s = rref([(1, 0), (0, 1)])
    assert s.normals == ((1, 0), (0, 1)) and s.codim == 2
    s = rref([(1, 1), (2, 2)])
    assert s.normals == ((1, 1),) and s.codim == 1


def test_rref_line_in_c3():
    # hand reduction: (1,-1,0),(0,1,-1) -> (1,0,-1),(0,1,-1)
    s = rref([(1, -1, 0), (0, 1, -1)])
    assert s.normals == ((1, 0, -1), (0, 1, -1))
    assert s.codim == 2
    assert s.contains_point((1, 1, 1)) and not s.contains_point((1, 2, 3))


def test_rref_rejects_zero_dimension():
    with pytest.raises(DimensionError):
        rref([], 0)
    with pytest.raises(DimensionError):
        rref([(1, 2), (1, 2, 3)])


def test_intersect_examples():
    x, y = rref([(1, 0)]), rref([(0, 1)])
    assert subspace_intersect(x, y) == Subspace.origin(2)
    assert subspace_intersect(x, x) == x
    p1, p2 = rref([(1, -1, 0)]), rref([(0, 1, -1)])
    assert subspace_intersect(p1, p2) == rref([(1, -1, 0), (0, 1, -1)])
    with pytest.raises(DimensionError):
        subspace_intersect(x, rref([(1, 0, 0)]))


def test_contains_examples():
    h = rref([(1, 0)])
    origin = Subspace.origin(2)
    assert subspace_contains(h, origin)
    assert not subspace_contains(origin, h)
    line = rref([(1, -1, 0), (0, 1, -1)])
    plane = rref([(1, -1, 0)])
    assert not subspace_contains(line, plane)
    assert subspace_contains(plane, line)


@pytest.mark.parametrize("rows", [[(1, 0)], [(1, -1, 0), (0, 1, -1)], [(1, 0), (0, 1)], [(2, 3, 5, 7)]])
def test_adapted_basis_cuts_out_w(rows):
    w = rref(rows)
    m = adapted_basis(w)
    inverse(m)  # invertible
    r = w.codim
    for v in w.basis():
        assert all(c == 0 for c in mat_vec(m, v)[:r])
    # and the first r coordinates are independent on the whole space
    assert rank([row for row in m[:r]]) == r


def test_adapted_basis_hyperplane_is_identity():
    assert adapted_basis(rref([(1, 0)])) == [(1, 0), (0, 1)]
    assert adapted_basis(Subspace.origin(2)) == [(1, 0), (0, 1)]


small = st.integers(-4, 4)


def rows_strategy(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=4)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), rows_strategy(n), st.randoms())),
       st.lists(st.integers(1, 5), min_size=4, max_size=4))
def test_rref_canonical_under_permutation_and_scaling(data, scales):
    n, rows, rnd = data
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    scaled = [[F(c) * s for c in row] for row, s in zip(shuffled, scales)]
    assert rref(rows, n) == rref(scaled, n)
    assert rref(rows, n).codim == rank(rows, n)
    assert rref(list(rref(rows, n).normals), n) == rref(rows, n)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), rows_strategy(n), rows_strategy(n),
                                                      rows_strategy(n))))
def test_intersection_is_meet(data):
    n, a, b, c = data
    s1, s2, s3 = rref(a, n), rref(b, n), rref(c, n)
    meet = subspace_intersect(s1, s2)
    assert subspace_contains(s1, meet) and subspace_contains(s2, meet)
    assert meet == subspace_intersect(s2, s1)
    assert subspace_intersect(meet, s3) == subspace_intersect(s1, subspace_intersect(s2, s3))
    assert meet.codim <= s1.codim + s2.codim
    independent = rank(list(s1.normals) + list(s2.normals), n) == s1.codim + s2.codim
    assert (meet.codim == s1.codim + s2.codim) == independent
    # any subspace inside both lies inside the meet
    if subspace_contains(s1, s3) and subspace_contains(s2, s3):
        assert subspace_contains(meet, s3)
    assert subspace_contains(s1, s1)
    if subspace_contains(s1, s2) and subspace_contains(s2, s1):
        assert s1 == s2


@given(st.fractions(), st.fractions().filter(lambda q: q != 0))
def test_rational_round_trips(a, b):
    assert (a + b) - b == a
    assert (a * b) / b == a
