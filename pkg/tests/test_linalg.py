from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from latfree.linalg import (
    IntEchelon,
    affine_dim,
    det,
    greedy_affine_basis,
    hyperplane_through,
    int_kernel_vector,
    mat_inverse,
    primitive,
    scale_to_int,
    solve_unique,
)


def test_echelon_rank():
    ech = IntEchelon(3)
    assert ech.add([1, 0, 0])
    assert ech.add([1, 1, 0])
    assert not ech.add([2, 1, 0])
    assert ech.add([0, 0, 5])
    assert ech.rank == 3


def test_affine_dim():
    assert affine_dim([(0, 0), (1, 0), (0, 1)]) == 2
    assert affine_dim([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dim([(3, 4)]) == 0
    assert affine_dim([]) == -1
    assert affine_dim([(Fraction(1, 2), 0), (Fraction(3, 2), 0)]) == 1


def test_greedy_affine_basis():
    pts = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0)]
    assert greedy_affine_basis(pts) == [1, 3]


def test_hyperplane_through():
    n, r = hyperplane_through([(2, 0), (0, 2)])
    assert (n, r) in {((1, 1), 2), ((-1, -1), -2)}
    n, r = hyperplane_through([(0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert (tuple(abs(x) for x in n), abs(r)) == ((0, 0, 1), 1)


def test_kernel_vector_is_orthogonal():
    rows = [[1, 2, 3], [0, 1, 1]]
    n = int_kernel_vector(rows, 3)
    assert all(sum(a * b for a, b in zip(row, n)) == 0 for row in rows)
    assert primitive(n) == n


def test_solve_unique():
    assert solve_unique([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    # inconsistent
    assert solve_unique([[1, 0], [1, 0]], [0, 1]) is None
    # underdetermined
    assert solve_unique([[1, 1]], [1]) is None
    # overdetermined but consistent
    assert solve_unique([[1, 0], [0, 1], [1, 1]], [2, 3, 5]) == (2, 3)


def test_det_and_inverse():
    m = [[1, 2], [3, 4]]
    assert det(m) == -2
    inv = mat_inverse(m)
    assert inv == [[Fraction(-2), Fraction(1)], [Fraction(3, 2), Fraction(-1, 2)]]
    assert mat_inverse([[1, 2], [2, 4]]) is None
    assert det([[1, 2], [2, 4]]) == 0


def test_scale_to_int():
    ipts, f = scale_to_int([(Fraction(1, 2), Fraction(1, 3))])
    assert f == 6 and ipts == [(3, 2)]


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        primitive((0, 0, 0))


@given(st.lists(st.integers(-30, 30), min_size=4, max_size=4))
def test_det_2x2_formula(entries):
    a, b, c, d = entries
    assert det([[a, b], [c, d]]) == a * d - b * c
