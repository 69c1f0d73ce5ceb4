import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from flpfactor.matpoly import (
    PolyMatrix,
    column_reduced_minors,
    d_i,
    det,
    full_column_rank_subsets,
    mat_mul,
    minors,
    rank,
    rank_bareiss,
    reduced_minors,
)
from flpfactor.polyring import associated
from support import EX1_F1, EX1_G, EX2_F1, EX2_G, M, R, example1, example2, from_sympy, random_poly, to_sympy, z1, z2, z3


def _sympy_matrix(m):
    return sympy.Matrix([[to_sympy(p) for p in row] for row in m.rows])


def _same_up_to_sign(a, b):
    return len(a) == len(b) and all(associated(x, y) or (not x and not y) for x, y in zip(a, b))


def _same_set_up_to_sign(a, b):
    return sorted(str(x.monic()) for x in a) == sorted(str(y.monic()) for y in b)


def test_det_examples():
    assert det(PolyMatrix.identity(3, R)) == R.one()
    m = M([[z1 * z2 - z2, z3 + 1], [0, z1**2 - 2 * z1 + 1]])
    assert det(m) == (z1 * z2 - z2) * (z1 - 1) ** 2
    assert det(M([[z1, z2, 1], [z3, 0, z1], [z1, z2, 1]])) == R.zero()
    with pytest.raises(ValueError):
        det(M([[z1, z2]]))


def test_rank_examples():
    assert rank(example1()) == 2
    assert rank(example2()) == 2
    assert rank(PolyMatrix.zeros(2, 3, R)) == 0


def test_minors_examples():
    assert minors(PolyMatrix.identity(2, R), 1) == [R.one(), R.zero(), R.zero(), R.one()]
    m = M([[0, z2, z1 - 1], [z1 * z2 - z2, 0, z3 + 1]])
    assert -z2 * (z1 - 1) * z2 in minors(m, 2)
    assert minors(example2(), 1) == [p for row in example2().rows for p in row]
    with pytest.raises(ValueError):
        minors(m, 3)


def test_d_i_examples():
    assert associated(d_i(example1(), 2), (z1 - 1) * z2)
    assert associated(d_i(example2(), 2), z1 * z2 * z3)
    I = PolyMatrix.identity(3, R)
    assert all(d_i(I, i) == R.one() for i in (1, 2, 3))
    with pytest.raises(ValueError):
        d_i(example1(), 3)


def test_column_reduced_minor_examples():
    c = column_reduced_minors(example1(), 2).values
    assert _same_set_up_to_sign(c, (R.one(), z2, -z1))
    c = column_reduced_minors(example2(), 2).values
    assert _same_set_up_to_sign(c, (z1, z3, z1 * z2))
    assert _same_set_up_to_sign(column_reduced_minors(EX1_F1, 2).values, (R.one(),))
    with pytest.raises(ValueError):
        column_reduced_minors(EX1_F1, 3)


def test_mat_mul_examples():
    assert mat_mul(EX1_G, EX1_F1) == example1()
    assert mat_mul(EX2_G, EX2_F1) == example2()
    A = example2()
    assert mat_mul(A, PolyMatrix.identity(3, R)) == A
    with pytest.raises(ValueError):
        mat_mul(EX1_F1, EX1_F1)


def test_reduced_minor_report_identity():
    rep = reduced_minors(example1(), 2)
    assert rep.d.leading_coefficient == 1
    assert all(a == rep.d * b for a, b in zip(rep.minors, rep.reduced))


def _random_matrix(rng, l, m, degree=2):
    return PolyMatrix([[random_poly(rng, degree=degree) for _ in range(m)] for _ in range(l)], R)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_det_matches_sympy(seed):
    m = _random_matrix(random.Random(seed), 3, 3)
    assert det(m) == from_sympy(_sympy_matrix(m).det(method="berkowitz"))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_rank_agrees_with_elimination(seed, r):
    rng = random.Random(seed)
    full = _random_matrix(rng, 3, 4)
    assert rank(full) == rank_bareiss(full)
    low = mat_mul(_random_matrix(rng, 3, r, 1), _random_matrix(rng, r, 4, 1))
    assert rank(low) == rank_bareiss(low) <= r


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_d_r_multiplicative(seed):
    rng = random.Random(seed)
    G = _random_matrix(rng, 3, 2, 1)
    F1 = _random_matrix(rng, 2, 3, 1)
    F = mat_mul(G, F1)
    if rank(F) != 2:
        return
    assert associated(d_i(F, 2), d_i(G, 2) * d_i(F1, 2))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_submatrix_choice_invariance(seed):
    rng = random.Random(seed)
    F = mat_mul(_random_matrix(rng, 3, 2, 1), _random_matrix(rng, 2, 3, 1))
    if rank(F) != 2:
        return
    sets = [column_reduced_minors(F, 2, cs).values for cs in full_column_rank_subsets(F, 2)]
    for s in sets[1:]:
        assert _same_up_to_sign(s, sets[0])
