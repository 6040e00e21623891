from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ztekit.ratmat import (Mat, ShapeError, coker_projection, commutation, hstack, inverse, kernel_matrix,
                           kron, permute_factors, permute_rows, rank, rat_str, regroup, solve,
                           tensor_digits, tensor_index, to_rat, vstack)

small = st.integers(-4, 4)


def mats(rows, cols):
    return st.lists(small, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Mat.from_entries(rows, cols, xs))


def shapes(max_side=3):
    return st.tuples(st.integers(1, max_side), st.integers(1, max_side))


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


def from_sympy(s):
    return Mat.from_entries(s.rows, s.cols, [Fraction(int(x.p), int(x.q)) for x in s])


def test_to_rat_accepts_strings_and_rejects_floats():
    assert to_rat("3/6") == Fraction(1, 2)
    assert rat_str(Fraction(-4, 2)) == "-2"
    with pytest.raises(TypeError):
        to_rat(0.5)


@given(st.data())
def test_product_matches_sympy(data):
    a, b, c = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    x, y = data.draw(mats(a, b)), data.draw(mats(b, c))
    assert x @ y == from_sympy(to_sympy(x) * to_sympy(y))


def test_product_shape_mismatch():
    with pytest.raises(ShapeError):
        Mat.identity(2) @ Mat.identity(3)


@given(st.data())
def test_kron_matches_sympy_and_mixed_product(data):
    (r1, c1), (r2, c2) = data.draw(shapes()), data.draw(shapes())
    a, b = data.draw(mats(r1, c1)), data.draw(mats(r2, c2))
    expected = sympy.kronecker_product(to_sympy(a), to_sympy(b))
    assert kron(a, b) == from_sympy(expected)
    c, d = data.draw(mats(c1, 2)), data.draw(mats(c2, 2))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=60)
@given(st.data())
def test_rank_nullity_and_kernel(data):
    r, c = data.draw(shapes(4))
    a = data.draw(mats(r, c))
    K = kernel_matrix(a)
    assert rank(a) == to_sympy(a).rank()
    assert rank(a) + K.cols == c
    assert (a @ K).is_zero()


@settings(max_examples=60)
@given(st.data())
def test_inverse_and_solve(data):
    n = data.draw(st.integers(1, 4))
    a = data.draw(mats(n, n))
    inv = inverse(a)
    if to_sympy(a).det() == 0:
        assert inv is None
    else:
        assert a @ inv == Mat.identity(n) and inv @ a == Mat.identity(n)
    b = data.draw(mats(n, 2))
    x = solve(a, b)
    consistent = rank(hstack(a, b)) == rank(a)
    assert (x is not None) == consistent
    if x is not None:
        assert a @ x == b


def test_coker_projection_of_image_line():
    a = Mat.column([1, 2, 0])
    proj, sec = coker_projection(a)
    assert proj.shape == (2, 3)
    assert (proj @ a).is_zero()
    assert proj @ sec == Mat.identity(2)


@settings(max_examples=60)
@given(st.data())
def test_coker_projection_properties(data):
    r, c = data.draw(shapes(4))
    a = data.draw(mats(r, c))
    proj, sec = coker_projection(a)
    assert proj.rows == r - rank(a)
    assert (proj @ a).is_zero()
    assert proj @ sec == Mat.identity(proj.rows)


def test_stacking():
    a, b = Mat.identity(2), Mat.zeros(2, 1)
    assert hstack(a, b).shape == (2, 3)
    assert vstack(a, b.T).shape == (3, 2)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.data())
def test_tensor_index_roundtrip(dims, data):
    total = 1
    for d in dims:
        total *= d
    k = data.draw(st.integers(0, total - 1))
    assert tensor_index(tensor_digits(k, dims), dims) == k


def test_commutation_swaps_factors():
    x, y = Mat.column([1, 2]), Mat.column([3, 4, 5])
    assert commutation(2, 3) @ kron(x, y) == kron(y, x)


@settings(max_examples=40)
@given(st.data())
def test_permute_factors_moves_tensor_factors(data):
    dims = data.draw(st.lists(st.integers(1, 3), min_size=2, max_size=3))
    perm = data.draw(st.permutations(range(len(dims))))
    vs = [data.draw(mats(d, 1)) for d in dims]
    assert permute_factors(dims, perm) @ kron(*vs) == kron(*[vs[p] for p in perm])


@settings(max_examples=40)
@given(st.data())
def test_regroup_agrees_with_permutation_matrices(data):
    dims = data.draw(st.lists(st.integers(1, 3), min_size=2, max_size=3))
    perm = list(data.draw(st.permutations(range(len(dims)))))
    n = 1
    for d in dims:
        n *= d
    m = data.draw(mats(n, 2))
    assert permute_rows(m, dims, perm) == permute_factors(dims, perm) @ m
    # full transpose through regroup
    assert regroup(m, [n, 2], [1, 0], 1) == m.T
