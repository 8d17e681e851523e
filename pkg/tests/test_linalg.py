from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kucomm import linalg

small = st.integers(-6, 6)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _mat_vec(rows, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in rows]


def _brute_det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * _brute_det([r[:j] + r[j + 1 :] for r in m[1:]]) for j in range(len(m)))


@given(matrices)
def test_nullspace_vectors_are_killed_and_rank_nullity(m):
    ncols = len(m[0])
    ns = linalg.nullspace(m, ncols)
    for v in ns:
        assert all(x == 0 for x in _mat_vec(m, v))
    assert linalg.rank(m) + len(ns) == ncols
    if ns:
        assert linalg.rank(ns) == len(ns)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_cofactor_expansion(m):
    assert linalg.det(m) == _brute_det(m)


@given(matrices, st.data())
def test_solve_reproduces_consistent_rhs(m, data):
    x = data.draw(st.lists(small, min_size=len(m[0]), max_size=len(m[0])))
    rhs = _mat_vec(m, x)
    sol = linalg.solve(m, rhs)
    assert _mat_vec(m, sol) == rhs


def test_inconsistent_system_raises():
    with pytest.raises(linalg.InconsistentSystem):
        linalg.solve([[1, 1], [2, 2]], [1, 3])


def test_solve_many_columns():
    m = [[2, 0], [0, 3]]
    assert linalg.solve_many(m, [[2, 3], [4, 0]]) == [[1, 1], [2, 0]]
