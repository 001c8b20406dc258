"""
Tests for strong and nonnegative resonances and the blow-up eigenvalue law.
"""

import random

import pytest

from src.algebra.scalars import NumberField
from src.analysis.charts import BlowupChart, BlowupKind, charts_for
from src.analysis.resonance import (
    Eigenvalues,
    blowup_eigenvalue_law,
    is_strongly_diagonalizable,
    nonneg_resonance_search,
    residue_relation_holds,
    strong_resonances,
)
from src.errors import ArityMismatch, BadDegree, MixedFields


class TestEigenvalues:
    """Test suite for the Eigenvalues record."""

    def test_needs_two_entries(self):
        with pytest.raises(ArityMismatch):
            Eigenvalues.of([1])

    def test_common_field(self):
        K = NumberField([-2, 0, 1])
        L = NumberField([-3, 0, 1])
        with pytest.raises(MixedFields):
            Eigenvalues(values=(K.gen(), L.gen()))

    def test_field_inferred_from_entries(self):
        K = NumberField([-2, 0, 1])
        a = Eigenvalues.of([1, K.gen(), 3])
        assert a.field == K
        assert str(a) == "(1, t, 3)"


class TestStrongResonance:
    """Test suite for strong resonances."""

    def test_rational_triple_is_resonant(self):
        basis = strong_resonances(Eigenvalues.of([1, 2, 3]))
        assert basis.rank == 2
        assert not is_strongly_diagonalizable(Eigenvalues.of([1, 2, 3]))

    def test_cubic_basis_is_non_resonant(self):
        K = NumberField([-2, 0, 0, 1])
        t = K.gen()
        assert is_strongly_diagonalizable(Eigenvalues.of([1, t, t * t]))

    def test_partial_relation(self):
        K = NumberField([-2, 0, 1])
        t = K.gen()
        basis = strong_resonances(Eigenvalues.of([1, t, t + 2]))
        assert basis.rank == 1
        assert basis.relations == [(2, 1, -1)]


class TestNonnegResonance:
    """Test suite for the bounded nonnegative search."""

    def test_minimal_relations(self):
        assert nonneg_resonance_search(Eigenvalues.of([1, 1, -2]), 50) == (1, 1, 1)
        assert nonneg_resonance_search(Eigenvalues.of([1, 1, -1]), 50) == (0, 1, 1)

    def test_positive_eigenvalues_have_none(self):
        assert nonneg_resonance_search(Eigenvalues.of([1, 2, 3]), 50) is None

    def test_bound_limits_search(self):
        assert nonneg_resonance_search(Eigenvalues.of([1, 1, -20]), 5) is None
        assert nonneg_resonance_search(Eigenvalues.of([1, 1, -20]), 20) == (10, 10, 1)

    def test_bad_bound(self):
        with pytest.raises(BadDegree):
            nonneg_resonance_search(Eigenvalues.of([1, -1]), 0)

    def test_residue_relation(self):
        a = Eigenvalues.of([1, 2, 3])
        assert residue_relation_holds(a, [a.field(2), a.field(-1), a.field(0)])
        assert not residue_relation_holds(a, [a.field(1), a.field(1), a.field(1)])


class TestEigenvalueLaw:
    """Test suite for eigenvalues after blowing up."""

    def test_punctual_chart(self):
        a = Eigenvalues.of([2, 5, 7])
        b = blowup_eigenvalue_law(a, BlowupChart.punctual(0))
        assert [v.to_rational() for v in b.values] == [2, 3, 5]

    def test_monoidal_axis3_chart2(self):
        a = Eigenvalues.of([2, 5, 7])
        b = blowup_eigenvalue_law(a, BlowupChart.monoidal(2, 1))
        assert [v.to_rational() for v in b.values] == [2, 5, 2]

    def test_strong_non_resonance_is_preserved(self):
        K = NumberField([-2, 0, 0, 1])
        rng = random.Random(7)
        charts = charts_for(BlowupKind.PUNCTUAL) + charts_for(BlowupKind.MONOIDAL)
        checked = 0
        for _ in range(50):
            a = Eigenvalues(values=tuple(K.element([rng.randint(-5, 5) for _ in range(3)]) for _ in range(3)))
            if not is_strongly_diagonalizable(a):
                continue
            checked += 1
            for chart in charts:
                assert is_strongly_diagonalizable(blowup_eigenvalue_law(a, chart))
        assert checked > 0
