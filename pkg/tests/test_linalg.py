"""
Tests for exact linear algebra helpers.
"""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from src.algebra.linalg import hermite_normal_form, integer_kernel, nullspace, pivot_columns, rank, row_reduce, xgcd


class TestIntegerLattices:
    """Test suite for integer kernels and Hermite normal form."""

    def test_xgcd(self):
        g, x, y = xgcd(12, 18)
        assert g == 6
        assert 12 * x + 18 * y == 6

    def test_kernel_of_single_row(self):
        kernel = integer_kernel([[1, 2, 3]], 3)
        assert len(kernel) == 2
        for v in kernel:
            assert v[0] + 2 * v[1] + 3 * v[2] == 0

    def test_hnf_shape(self):
        basis = hermite_normal_form([[0, 3, -2], [1, 4, -3]])
        assert basis == [[1, 1, -1], [0, 3, -2]]
        assert pivot_columns(basis) == [0, 1]

    def test_hnf_drops_zero_rows(self):
        assert hermite_normal_form([[0, 0], [0, 0]]) == []
        assert hermite_normal_form([[2, 4], [1, 2]]) == [[1, 2]]

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(min_value=-5, max_value=5), min_size=4, max_size=4), min_size=1, max_size=3))
    def test_kernel_vectors_annihilate(self, rows):
        for v in integer_kernel(rows, 4):
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0


class TestFieldLinearAlgebra:
    """Test suite for row reduction over Q."""

    def test_row_reduce(self):
        rows = [[Fraction(2), Fraction(4)], [Fraction(1), Fraction(3)]]
        reduced, pivots = row_reduce(rows, 2)
        assert pivots == [0, 1]
        assert reduced == [[1, 0], [0, 1]]

    def test_nullspace(self):
        rows = [[Fraction(1), Fraction(1), Fraction(-2)]]
        basis = nullspace(rows, 3, Fraction(0), Fraction(1))
        assert basis == [[-1, 1, 0], [2, 0, 1]]

    def test_rank(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        assert rank(rows, 2) == 1
