"""
Tests for number fields, field elements and integer relation lattices.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from src.algebra.scalars import (
    IntegerRelationBasis,
    NumberField,
    fe_add,
    fe_inverse,
    fe_mul,
    q_linear_relation_lattice,
)
from src.errors import DivisionByZero, InvalidField, MixedFields, ZeroDivisor

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


class TestNumberField:
    """Test suite for NumberField construction."""

    def test_minpoly_made_monic(self):
        K = NumberField([-4, 0, 2])
        assert K.minpoly == (Fraction(-2), Fraction(0), Fraction(1))
        assert K.degree == 2

    def test_rationals(self):
        Q = NumberField.rationals()
        assert Q.is_rational
        assert Q(3) * Q(Fraction(1, 3)) == 1

    def test_constant_minpoly_rejected(self):
        with pytest.raises(InvalidField):
            NumberField([5])

    def test_non_squarefree_minpoly_rejected(self):
        with pytest.raises(InvalidField):
            NumberField([0, 0, 1])

    def test_fields_compare_by_minpoly(self):
        assert NumberField([-2, 0, 1]) == NumberField([-4, 0, 2])
        assert NumberField([-2, 0, 1]) != NumberField([-3, 0, 1])


class TestFieldElement:
    """Test suite for arithmetic in Q(sqrt 2)."""

    def setup_method(self):
        self.K = NumberField([-2, 0, 1])
        self.t = self.K.gen()

    def test_generator_squares_to_two(self):
        assert self.t * self.t == 2
        assert (self.t ** 2).is_rational()

    def test_inverse(self):
        x = self.t + 1
        assert fe_inverse(x) == self.t - 1
        assert x * x.inverse() == 1

    def test_negative_power(self):
        assert self.t ** -2 == Fraction(1, 2)

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZero):
            self.K.zero().inverse()

    def test_zero_divisor_in_reducible_field(self):
        K = NumberField([-1, 0, 1])
        with pytest.raises(ZeroDivisor):
            (K.gen() - 1).inverse()

    def test_mixed_fields(self):
        L = NumberField([-3, 0, 1])
        with pytest.raises(MixedFields):
            self.t + L.gen()

    def test_printing(self):
        assert str(self.t + 1) == "t + 1"
        assert str(self.K(Fraction(-1, 2)) * self.t) == "-1/2*t"
        assert str(self.K.zero()) == "0"

    def test_elements_reduce_modulo_minpoly(self):
        assert self.K.element([1, 0, 1]) == 3

    @settings(max_examples=40, deadline=None)
    @given(small, small, small, small)
    def test_inverse_property(self, a, b, c, d):
        x = self.K.element([a, b])
        y = self.K.element([c, d])
        assert fe_add(x, y) == fe_add(y, x)
        assert fe_mul(x, y) == fe_mul(y, x)
        if not x.is_zero():
            assert fe_mul(x, fe_inverse(x)) == 1


class TestRelationLattice:
    """Test suite for q_linear_relation_lattice."""

    def test_rational_triple(self):
        Q = NumberField.rationals()
        basis = q_linear_relation_lattice([Q(1), Q(2), Q(3)])
        assert basis.relations == [(1, 1, -1), (0, 3, -2)]
        assert basis.rank == 2

    def test_independent_triple(self):
        K = NumberField([-2, 0, 0, 1])
        t = K.gen()
        basis = q_linear_relation_lattice([K.one(), t, t * t])
        assert basis.rank == 0
        assert basis.relations == []

    def test_contains(self):
        Q = NumberField.rationals()
        basis = q_linear_relation_lattice([Q(1), Q(1), Q(-2)])
        assert basis.contains((1, 1, 1))
        assert basis.contains((2, 0, 1))
        assert not basis.contains((1, 0, 0))

    def test_basis_is_saturated(self):
        Q = NumberField.rationals()
        basis = q_linear_relation_lattice([Q(2), Q(4)])
        assert basis.relations == [(2, -1)]

    def test_rank_validated(self):
        with pytest.raises(ValueError):
            IntegerRelationBasis(relations=[(1, -1)], length=2, rank=0)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=6, max_size=6))
    def test_rank_matches_sympy(self, coords):
        K = NumberField([-2, 0, 1])
        elems = [K.element(coords[2 * i: 2 * i + 2]) for i in range(3)]
        basis = q_linear_relation_lattice(elems)
        matrix = sympy.Matrix([[sympy.Rational(e.coords[k].numerator, e.coords[k].denominator) for e in elems] for k in range(2)])
        assert basis.rank == 3 - matrix.rank()
        for relation in basis.relations:
            total = K.zero()
            for c, e in zip(relation, elems):
                total = total + e * c
            assert total.is_zero()
