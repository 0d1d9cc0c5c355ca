from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

# matrix generation can be slow under load; correctness is what matters
settings.register_profile("no-deadline", deadline=None)
settings.load_profile("no-deadline")

from aisles.linalg import Mat, in_span, span_rank

small_entries = st.integers(min_value=-5, max_value=5)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            ).map(Mat)
        )
    )


def test_shapes_and_zero_dims():
    z = Mat.zeros(0, 3)
    assert z.nrows == 0 and z.ncols == 3
    assert (z * Mat.zeros(3, 2)).ncols == 2
    assert Mat.zeros(2, 0).rank() == 0
    with pytest.raises(ValueError):
        Mat([[1, 2], [3]])


def test_product_and_transpose():
    a = Mat([[1, 2], [3, 4]])
    b = Mat([[0, 1], [1, 0]])
    assert a * b == Mat([[2, 1], [4, 3]])
    assert a.transpose().transpose() == a


@given(matrices())
def test_rank_equals_transpose_rank(m):
    assert m.rank() == m.transpose().rank()


@given(matrices())
def test_nullspace_vectors_annihilate(m):
    for v in m.nullspace():
        assert (m * v).is_zero()
    assert m.rank() + len(m.nullspace()) == m.ncols


@given(matrices())
def test_left_nullspace_rows_annihilate(m):
    for r in m.left_nullspace():
        assert (r * m).is_zero()


@given(matrices(), st.lists(small_entries, min_size=1, max_size=4))
def test_solve_is_a_solution(m, xs):
    xs = (xs * m.ncols)[: m.ncols]
    b = m * Mat.column(xs)
    x = m.solve(b)
    assert x is not None
    assert m * x == b


def test_solve_inconsistent():
    m = Mat([[1, 0], [1, 0]])
    assert m.solve(Mat.column([0, 1])) is None


def test_rref_pivots():
    m = Mat([[2, 4], [1, 2]])
    red, pivots = m.rref()
    assert pivots == [0]
    assert red.rows[0] == [Fraction(1), Fraction(2)]


def test_span_helpers():
    assert span_rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert in_span([2, 2], [[1, 1]])
    assert not in_span([1, 0], [[1, 1]])
    assert span_rank([]) == 0
