"""Fraction-free elimination vs the rational oracle, plus the batch kernel."""

import random
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_symmetric_matrix
from sgrank import batch_ranks, determinant, rank, rank_oracle


def cofactor_det(mat):
    """Textbook expansion, the slowest possible cross-check."""
    n = len(mat)
    if n == 0:
        return 1
    total = 0
    sign = 1
    for perm in permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= mat[i][j]
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        total += (-1) ** inv * prod
    return total


int_matrices = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


class TestRank:
    def test_zero_matrix(self):
        rep = rank([[0, 0], [0, 0]])
        assert (rep.rank, rep.nullity, rep.order) == (0, 2, 2)

    def test_single_edge(self):
        assert rank([[0, 1], [1, 0]]).rank == 2

    def test_known_singular(self):
        # rows 0 and 2 identical
        assert rank([[1, 2, 1], [0, 1, 3], [1, 2, 1]]).rank == 2

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            rank([[1, 2], [3, 4], [5, 6]])

    def test_empty_matrix(self):
        assert rank([]).rank == 0

    @given(int_matrices)
    @settings(max_examples=200)
    def test_matches_oracle(self, mat):
        assert rank(mat).rank == rank_oracle(mat)

    def test_large_entries_stay_exact(self):
        # Hilbert-like integer matrix with huge minors
        n = 9
        mat = [[(i + j + 1) ** 3 for j in range(n)] for i in range(n)]
        assert rank(mat).rank == rank_oracle(mat)


class TestDeterminant:
    @given(int_matrices)
    @settings(max_examples=150)
    def test_matches_cofactor_expansion(self, mat):
        if len(mat) <= 5:
            assert determinant(mat) == cofactor_det(mat)

    def test_identity_and_swap_signs(self):
        assert determinant([[1, 0], [0, 1]]) == 1
        assert determinant([[0, 1], [1, 0]]) == -1
        # forces a row swap inside the elimination
        assert determinant([[0, 1, 2], [1, 0, 3], [2, 3, 0]]) == 12

    def test_singular_is_zero(self):
        assert determinant([[1, 1], [1, 1]]) == 0


class TestOracle:
    def test_oracle_uses_rationals(self):
        # a matrix that breaks naive float elimination thresholds would
        # require more contrast; instead check a fraction-heavy case exactly
        mat = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
        assert rank_oracle(mat) == 2
        assert rank(mat).rank == 2

    def test_fraction_pivot_selection(self):
        mat = [[2, 4], [1, 2]]
        assert rank_oracle(mat) == 1


class TestBatchKernel:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 7, 8, 9, 12, 13, 14, 15])
    def test_matches_scalar_bareiss(self, n):
        rng = np.random.default_rng(100 + n)
        batch = 300 if n <= 10 else 80
        mats = rng.integers(-1, 2, size=(batch, n, n)).astype(np.int8)
        half = batch // 2
        mats[:half] = np.tril(mats[:half]) + np.tril(mats[:half], -1).transpose(0, 2, 1)
        got = batch_ranks(mats)
        expect = [rank([[int(x) for x in row] for row in m]).rank for m in mats]
        assert got.tolist() == expect

    def test_float32_float64_gfp_agree(self):
        from sgrank.exact import _batch_ranks_bareiss, _batch_ranks_gfp

        rng = np.random.default_rng(7)
        for n in (4, 8):
            mats = rng.integers(-1, 2, size=(500, n, n)).astype(np.int8)
            a = _batch_ranks_bareiss(mats, np.float32)
            b = _batch_ranks_bareiss(mats, np.float64)
            c = _batch_ranks_gfp(mats)
            assert (a == b).all() and (b == c).all()

    def test_empty_batch(self):
        out = batch_ranks(np.zeros((0, 5, 5), dtype=np.int8))
        assert out.shape == (0,)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            batch_ranks(np.zeros((3, 4), dtype=np.int8))
        with pytest.raises(ValueError):
            batch_ranks(np.zeros((2, 3, 4), dtype=np.int8))
        with pytest.raises(ValueError):
            batch_ranks(np.full((1, 2, 2), 2, dtype=np.int8))
        with pytest.raises(ValueError):
            batch_ranks(np.zeros((1, 16, 16), dtype=np.int8))

    def test_worst_case_magnitudes(self):
        # all-ones-off-diagonal and alternating-sign matrices drive the
        # largest minors the kernel can meet at each dtype boundary
        for n in (8, 13):
            mats = []
            ones = np.ones((n, n), dtype=np.int8)
            np.fill_diagonal(ones, 0)
            mats.append(ones)
            alt = np.fromfunction(lambda i, j: (-1) ** (i + j), (n, n)).astype(np.int8)
            np.fill_diagonal(alt, 0)
            mats.append(alt)
            rng = np.random.default_rng(n)
            sym = rng.integers(-1, 2, size=(64, n, n))
            sym = np.tril(sym) + np.tril(sym, -1).transpose(0, 2, 1)
            mats.extend(sym.astype(np.int8))
            arr = np.stack(mats)
            got = batch_ranks(arr)
            expect = [rank([[int(x) for x in row] for row in m]).rank for m in arr]
            assert got.tolist() == expect


def test_rank_report_consistency():
    rng = random.Random(42)
    for _ in range(40):
        n = rng.randint(1, 8)
        mat = random_symmetric_matrix(rng, n)
        rep = rank(mat)
        assert rep.rank + rep.nullity == rep.order == n
        assert rep.rank == rank_oracle(mat)
