import hypothesis as h
import hypothesis.strategies as st

from raag.complexes.fixtures import cycle
from raag.homology.chain_complex import simplicial_chain_complex
from raag.homology.smith import divisibility_chain, invariant_factors, smith_normal_form
from raag.homology.sparse_matrix import SparseIntMatrix
from raag.tests.strategies import int_matrices


def snf(rows):
    return smith_normal_form(SparseIntMatrix.from_dense(rows))


def test_diagonal_examples():
    assert snf([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert snf([[2, 4], [6, 8]]).diagonal == (2, 4)
    assert snf([[1, 0, 0], [0, 1, 0]]).diagonal == (1, 1)
    assert snf([[4]]).diagonal == (4,)


def test_zero_matrix():
    result = smith_normal_form(SparseIntMatrix(2, 3))
    assert result.diagonal == (0, 0)
    assert result.rank == 0
    assert result.torsion() == ()


def test_cycle_boundary():
    boundary = simplicial_chain_complex(cycle(3)).boundary(1)
    result = smith_normal_form(boundary)
    assert result.rank == 2
    assert result.diagonal == (1, 1, 0)


def test_torsion():
    result = snf([[2, 0, 0], [0, 2, 0], [0, 0, 0]])
    assert result.nonzero() == (2, 2)
    assert result.torsion() == (2, 2)


def test_divisibility_chain():
    assert divisibility_chain([6, 4]) == [2, 12]
    assert divisibility_chain([3, 0, -2]) == [1, 6]


def test_invariant_factors():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 2, 1]) == (2, 4)
    assert invariant_factors([]) == ()


@h.settings(max_examples=100, deadline=None)
@h.given(int_matrices(), st.randoms(use_true_random=False))
def test_permutation_invariance(rows, rng):
    matrix = SparseIntMatrix.from_dense(rows)
    row_order = list(range(matrix.n_rows))
    col_order = list(range(matrix.n_cols))
    rng.shuffle(row_order)
    rng.shuffle(col_order)
    permuted = matrix.permuted(row_order, col_order)
    assert smith_normal_form(permuted) == smith_normal_form(matrix)


@h.settings(max_examples=100, deadline=None)
@h.given(int_matrices())
def test_transpose_invariance(rows):
    matrix = SparseIntMatrix.from_dense(rows)
    assert smith_normal_form(matrix.transpose()) == smith_normal_form(matrix)


@h.settings(max_examples=100, deadline=None)
@h.given(int_matrices())
def test_diagonal_divides(rows):
    nonzero = snf(rows).nonzero()
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
