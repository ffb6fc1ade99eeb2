import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latfree.errors import DegenerateInput
from latfree.geometry import axis_simplex, convex_hull, polytope_from_json, polytope_to_json
from oracles import hull_vertices_by_lp, point_in_hull


def F(a, b=1):
    return Fraction(a, b)


def test_interior_edge_point_dropped():
    p = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert set(p.vertices) == {(0, 0), (2, 0), (0, 2)}
    assert len(p.halfspaces) == 3


def test_unit_square():
    p = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(p.vertices) == 4
    assert len(p.halfspaces) == 4
    p.validate()


def test_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        convex_hull([(1, 2), (1, 2), (1, 2)])
    with pytest.raises(DegenerateInput):
        convex_hull([])


def test_segment_hull():
    p = convex_hull([(0,), (F(5, 2),), (1,)])
    assert p.vertices == ((0,), (F(5, 2),))
    p.validate()


def test_lower_dimensional_hull_carries_chart():
    # square embedded in the z=1 plane of R^3
    pts = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (F(1, 2), F(1, 2), 1)]
    p = convex_hull(pts)
    assert p.affine_dimension == 2 and not p.is_full_dimensional
    assert len(p.vertices) == 4
    assert p.contains((F(1, 2), F(1, 2), 1))
    assert p.in_relative_interior((F(1, 2), F(1, 2), 1))
    assert not p.contains((F(1, 2), F(1, 2), 0))
    assert not p.in_relative_interior((0, 0, 1))
    p.validate()


def test_hull_halfspace_consistency_invariant():
    rng = random.Random(4)
    for _ in range(30):
        d = rng.choice([2, 3])
        pts = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(rng.randint(d + 1, 9))]
        try:
            p = convex_hull(pts)
        except DegenerateInput:
            continue
        p.validate()
        for q in pts:
            assert p.contains(q)


def test_vertices_match_lp_oracle_randomized():
    rng = random.Random(99)
    for _ in range(40):
        d = rng.choice([2, 3, 4])
        pts = [tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(rng.randint(d + 1, 10))]
        try:
            p = convex_hull(pts)
        except DegenerateInput:
            continue
        assert set(p.vertices) == set(hull_vertices_by_lp(pts))
        q = tuple(rng.randint(-4, 4) for _ in range(d))
        assert p.contains(q) == point_in_hull(q, pts)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
        min_size=3,
        max_size=8,
    ),
    st.randoms(use_true_random=False),
)
def test_hull_invariant_under_permutation(pts, rnd):
    try:
        a = convex_hull(pts)
    except DegenerateInput:
        return
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    b = convex_hull(shuffled)
    assert a == b


def test_simplex_hull_has_expected_facets():
    for legs in [(2, 2), (1, 5), (2, 3, 6), (3, 3, F(9, 2), 9)]:
        p = axis_simplex(legs)
        assert len(p.vertices) == len(legs) + 1
        assert len(p.halfspaces) == len(legs) + 1
        p.validate()


def test_polytope_json_roundtrip():
    p = axis_simplex([2, 3, 6])
    doc = polytope_to_json(p)
    q = polytope_from_json(doc)
    assert q == p
    assert doc["vertices"][0] == ["0/1", "0/1", "0/1"]
    assert all(isinstance(h["rhs"], int) for h in doc["halfspaces"])


def test_polytope_json_rejects_corruption():
    p = axis_simplex([2, 2])
    doc = polytope_to_json(p)
    doc["vertices"][-1] = ["5/1", "5/1"]
    with pytest.raises(ValueError):
        polytope_from_json(doc)
