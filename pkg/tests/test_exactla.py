from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz.exactla import (
    NotSquareError,
    RatMatrix,
    determinant,
    kernel_basis,
    rank,
    reduce_mod_echelon,
    rref,
)
from value_oracles import laplace_det, naive_rank

rationals = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
)


def matrices(max_dim=5):
    return st.tuples(
        st.integers(1, max_dim), st.integers(1, max_dim)
    ).flatmap(
        lambda shape: st.lists(
            st.lists(rationals, min_size=shape[1], max_size=shape[1]),
            min_size=shape[0],
            max_size=shape[0],
        )
    )


def test_identity_and_zero():
    eye = RatMatrix.identity(3)
    assert rank(eye) == 3
    assert determinant(eye) == 1
    assert rref(eye).matrix == eye
    zero = RatMatrix.zero(2, 4)
    assert rank(zero) == 0
    assert rref(zero).pivot_columns == ()
    assert len(kernel_basis(zero)) == 4


def test_rank_one_outer_product():
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [-1, -2, -3]])
    ech = rref(m)
    assert ech.rank == 1
    assert ech.pivot_columns == (0,)
    assert ech.matrix.to_lists()[0] == [1, 2, 3]


def test_kernel_of_sum_functional():
    m = RatMatrix.from_rows([[1, 1]])
    (vec,) = kernel_basis(m)
    assert vec == [Fraction(-1), Fraction(1)]


def test_degree_two_slice_matrix_frozen():
    # relations among degree-2 monomials x2 xy xz y2 yz z2 coming from the
    # generators (x^2, y^2 - xz, z^2, xy, yz)
    m = RatMatrix.from_rows(
        [
            [1, 0, 0, 0, 0, 0],
            [0, 0, -1, 1, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
        ]
    )
    ech = rref(m)
    assert ech.rank == 5
    assert ech.pivot_columns == (0, 1, 2, 4, 5)
    # the pivot-2 row is xz - y^2 after normalization
    assert ech.matrix.row_dicts()[2] == {2: Fraction(1), 3: Fraction(-1)}


def test_determinant_rational_entries():
    m = RatMatrix.from_rows(
        [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    )
    assert determinant(m) == Fraction(1, 60)


def test_determinant_requires_square():
    with pytest.raises(NotSquareError):
        determinant(RatMatrix.zero(2, 3))


def test_matmul_shape_mismatch():
    with pytest.raises(ValueError):
        RatMatrix.zero(2, 3) @ RatMatrix.zero(2, 3)


def test_entry_validation():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, {(2, 0): 1})


def test_reduce_mod_echelon_membership():
    m = RatMatrix.from_rows([[1, 0, 2], [0, 1, -1]])
    ech = rref(m)
    inside = {0: Fraction(3), 1: Fraction(5), 2: Fraction(1)}  # 3*r0 + 5*r1
    assert reduce_mod_echelon(ech, inside) == {}
    outside = reduce_mod_echelon(ech, {0: Fraction(1)})
    assert outside and all(c not in ech.pivot_columns for c in outside)


@given(matrices())
@settings(max_examples=100)
def test_rank_agrees_with_naive_and_transpose(rows):
    m = RatMatrix.from_rows(rows)
    r = rank(m)
    assert r == naive_rank(rows)
    assert r == rank(m.transpose())


@given(matrices())
@settings(max_examples=100)
def test_rref_is_idempotent_and_pivots_are_unit(rows):
    ech = rref(RatMatrix.from_rows(rows))
    again = rref(ech.matrix)
    assert again.matrix == ech.matrix
    assert again.pivot_columns == ech.pivot_columns
    for i, pcol in enumerate(ech.pivot_columns):
        assert ech.matrix.entry(i, pcol) == 1


@given(matrices())
@settings(max_examples=100)
def test_kernel_vectors_annihilate(rows):
    m = RatMatrix.from_rows(rows)
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for vec in basis:
        col = RatMatrix.from_rows([[v] for v in vec])
        assert (m @ col).entries == {}


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(
                st.lists(rationals, min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            ),
            st.lists(
                st.lists(rationals, min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            ),
        )
    )
)
@settings(max_examples=80)
def test_determinant_is_multiplicative(pair):
    a_rows, b_rows = pair
    a = RatMatrix.from_rows(a_rows)
    b = RatMatrix.from_rows(b_rows)
    assert determinant(a @ b) == determinant(a) * determinant(b)
    assert determinant(a) == laplace_det(a_rows)


def test_determinant_row_swap_flips_sign():
    m = RatMatrix.from_rows([[0, 2], [3, 0]])
    swapped = RatMatrix.from_rows([[3, 0], [0, 2]])
    assert determinant(m) == -determinant(swapped) == Fraction(-6)
