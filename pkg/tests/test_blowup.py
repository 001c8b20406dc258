"""
Tests for blow-up charts and strict transforms.
"""

import random

import pytest

from src.algebra.polyalg import Poly
from src.algebra.scalars import NumberField
from src.analysis.blowup import (
    axis_invariance,
    linear_diagonal,
    transform_all_charts,
    transform_form,
    transform_vector_field,
)
from src.analysis.charts import BlowupChart, BlowupKind, charts_for
from src.analysis.foliation import jouanolou_field
from src.analysis.resonance import Eigenvalues, blowup_eigenvalue_law
from src.errors import BadChart, ZeroField, ZeroForm
from src.forms.exterior import MeroForm, VectorField

Q = NumberField.rationals()


class TestCharts:
    """Test suite for BlowupChart validation and enumeration."""

    def test_monoidal_axis_equal_to_chart(self):
        with pytest.raises(BadChart):
            BlowupChart.monoidal(1, 1)

    def test_chart_out_of_range(self):
        with pytest.raises(BadChart):
            BlowupChart.punctual(3)

    def test_punctual_takes_no_axis(self):
        with pytest.raises(BadChart):
            BlowupChart(kind=BlowupKind.PUNCTUAL, chart=0, axis=1)

    def test_charts_for(self):
        assert len(charts_for(BlowupKind.PUNCTUAL)) == 3
        assert len(charts_for(BlowupKind.MONOIDAL)) == 6
        assert charts_for(BlowupKind.MONOIDAL, 2) == [BlowupChart.monoidal(2, 0), BlowupChart.monoidal(2, 1)]

    def test_center_axis_and_label(self):
        chart = BlowupChart.monoidal(2, 1)
        assert chart.center_axis == 0
        assert chart.label == "monoidal axis 3 chart 2"
        assert BlowupChart.punctual(0).center_axis is None

    def test_substitution(self):
        x1, x2, x3 = (Poly.variable(i, Q, 3) for i in range(3))
        assert BlowupChart.punctual(0).substitution(Q) == [x1, x1 * x2, x1 * x3]
        assert BlowupChart.monoidal(2, 1).substitution(Q) == [x1, x2, x2 * x3]


class TestVectorFieldTransforms:
    """Test suite for strict transforms of vector fields."""

    def test_radial_field_is_dicritical(self):
        result = transform_vector_field(VectorField.radial(Q, 3), BlowupChart.punctual(0))
        assert result.object == VectorField([1, 0, 0], Q)
        assert result.exceptional_multiplicity == 1
        assert result.dicritical

    def test_diagonal_field_is_not_dicritical(self):
        X = VectorField.diagonal([Q(1), Q(2), Q(4)])
        for result in transform_all_charts(X, BlowupKind.PUNCTUAL):
            assert not result.dicritical
            assert result.exceptional_multiplicity == 0

    def test_regular_field_has_no_exceptional_factor(self):
        x1, x2, x3 = (Poly.variable(i, Q, 3) for i in range(3))
        result = transform_vector_field(VectorField([1, 0, 0], Q), BlowupChart.punctual(0))
        assert result.object == VectorField([x1, -x2, -x3], Q)
        assert result.exceptional_multiplicity == 0
        assert not result.dicritical

    def test_multiplicity_is_never_negative(self):
        for components in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]):
            for result in transform_all_charts(VectorField(components, Q), BlowupKind.PUNCTUAL):
                assert result.exceptional_multiplicity >= 0

    def test_zero_field(self):
        with pytest.raises(ZeroField):
            transform_vector_field(VectorField([0, 0, 0], Q), BlowupChart.punctual(0))

    def test_linear_diagonal(self):
        X = VectorField.diagonal([Q(2), Q(5), Q(7)])
        assert linear_diagonal(X) == [2, 5, 7]
        x1, x2, _ = (Poly.variable(i, Q, 3) for i in range(3))
        assert linear_diagonal(VectorField([x2, x1, 0], Q)) is None

    def test_linear_part_follows_eigenvalue_law(self):
        rng = random.Random(11)
        charts = [BlowupChart.punctual(0), BlowupChart.monoidal(2, 1)]
        checked = 0
        while checked < 100:
            values = [rng.randint(-6, 6) for _ in range(3)]
            if 0 in values or len(set(values)) < 3:
                continue
            a = Eigenvalues.of(values)
            X = VectorField.diagonal(list(a.values))
            for chart in charts:
                strict = transform_vector_field(X, chart).object
                assert linear_diagonal(strict) == list(blowup_eigenvalue_law(a, chart).values)
            checked += 1


class TestFormTransforms:
    """Test suite for strict transforms of 1-forms."""

    def setup_method(self):
        self.x1, self.x2, self.x3 = (Poly.variable(i, Q, 3) for i in range(3))
        self.dx1, self.dx2, self.dx3 = (MeroForm.dx(i, 3, Q) for i in range(3))

    def test_pencil_of_planes_is_dicritical(self):
        w = self.dx1 * self.x2 - self.dx2 * self.x1
        result = transform_form(w, BlowupChart.punctual(0))
        assert result.object == self.dx2
        assert result.exceptional_multiplicity == 2
        assert result.dicritical

    def test_log_form_keeps_its_shape(self):
        w = self.dx1 * (self.x2 * self.x3) + self.dx2 * (self.x1 * self.x3) - self.dx3 * (self.x1 * self.x2)
        result = transform_form(w, BlowupChart.punctual(0))
        assert result.object == w
        assert result.exceptional_multiplicity == 2
        assert not result.dicritical

    def test_zero_form(self):
        with pytest.raises(ZeroForm):
            transform_form(MeroForm.zero(1, 3, Q), BlowupChart.punctual(0))


class TestAxisInvariance:
    """Test suite for invariance of coordinate axes."""

    def test_diagonal_field_keeps_axes(self):
        X = VectorField.diagonal([Q(1), Q(2), Q(3)])
        assert all(axis_invariance(X, k) for k in range(3))

    def test_jouanolou_field_moves_axes(self):
        X = jouanolou_field(2)
        assert not any(axis_invariance(X, k) for k in range(3))
