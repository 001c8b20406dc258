"""
Tests for pencils of integrable 1-forms and their classification.
"""

from fractions import Fraction

import pytest

from src.algebra.polyalg import Poly, RatFunc
from src.algebra.scalars import NumberField
from src.analysis.foliation import tangent_log_pencil
from src.analysis.pencil import (
    Pencil,
    PencilCase,
    axis_2form,
    classify,
    connection_form,
    curvature_factor,
    decompose_over_pair,
    is_axis_first_integral,
    log_axis_formula,
    log_pencil,
    member,
    member_codim1_locus,
    pencil_condition,
    pencil_from_three,
    sample_exceptional_parameters,
    theta_is_unique,
    verify_axis_invariant_hypersurface,
    verify_theta_on_members,
)
from src.analysis.resonance import Eigenvalues
from src.errors import (
    ArityMismatch,
    DegeneratePencil,
    NotAPencil,
    NotCoplanar,
    NotIntegrable,
    NotTangentToEta,
    ZeroParameters,
)
from src.forms.exterior import MeroForm, ext_derivative, wedge

Q = NumberField.rationals()


class PencilFixtures:
    def setup_method(self):
        self.x1, self.x2, self.x3 = (Poly.variable(i, Q, 3) for i in range(3))
        self.dx1, self.dx2, self.dx3 = (MeroForm.dx(i, 3, Q) for i in range(3))


class TestPencilConstruction(PencilFixtures):
    """Test suite for Pencil validation and the connection form."""

    def test_theta_of_monomial_pencil(self):
        p = Pencil(self.dx1 * self.x2, self.dx2 * self.x1)
        assert p.theta == self.dx1 / self.x1 + self.dx2 / self.x2
        assert theta_is_unique(p)
        for w in (p.gen1, p.gen2):
            assert ext_derivative(w) == wedge(p.theta, w)

    def test_connection_form_from_last_variable(self):
        p = Pencil(self.dx1, self.dx2 + self.dx1 * self.x2 ** 2)
        assert connection_form(p, "last") == p.theta
        with pytest.raises(ValueError):
            connection_form(p, "middle")

    def test_dependent_generators(self):
        with pytest.raises(DegeneratePencil):
            Pencil(self.dx1 * self.x2, self.dx1 * (self.x2 * 2))

    def test_non_integrable_generator(self):
        with pytest.raises(NotAPencil):
            Pencil(self.dx1, self.dx3 - self.dx1 * self.x2)

    def test_pencil_condition_violated(self):
        w1, w2 = self.dx3 * self.x2, self.dx1 * self.x3
        assert not pencil_condition(w1, w2)
        with pytest.raises(NotAPencil):
            Pencil(w1, w2)

    def test_needs_three_variables(self):
        dy1, dy2 = MeroForm.dx(0, 2, Q), MeroForm.dx(1, 2, Q)
        with pytest.raises(ArityMismatch):
            Pencil(dy1, dy2)

    def test_printing(self):
        p = Pencil(self.dx1, self.dx2)
        assert str(p) == "pencil(d(x1), d(x2))"


class TestDecomposition(PencilFixtures):
    """Test suite for decompose_over_pair and pencil_from_three."""

    def test_coplanar(self):
        w3 = self.dx1 * self.x2 + self.dx2 * 3
        l1, l2 = decompose_over_pair(w3, self.dx1, self.dx2)
        assert l1.as_poly() == self.x2
        assert l2.constant_value() == 3

    def test_not_coplanar(self):
        with pytest.raises(NotCoplanar):
            decompose_over_pair(self.dx3, self.dx1, self.dx2)

    def test_pencil_from_three(self):
        eta = wedge(self.dx1, self.dx2)
        p = pencil_from_three(self.dx1, self.dx2, self.dx1 + self.dx2, eta)
        assert p.gen1 == self.dx1
        assert p.gen2 == self.dx2

    def test_pencil_from_three_rescales(self):
        eta = wedge(self.dx1, self.dx2)
        w3 = self.dx1 * self.x2 + self.dx2 * self.x1
        p = pencil_from_three(self.dx1, self.dx2, w3, eta)
        assert p.gen1 + p.gen2 == w3

    def test_form_not_tangent_to_eta(self):
        eta = wedge(self.dx1, self.dx2)
        with pytest.raises(NotTangentToEta):
            pencil_from_three(self.dx1, self.dx2, self.dx3, eta)

    def test_proportional_third_form(self):
        eta = wedge(self.dx1, self.dx2)
        with pytest.raises(DegeneratePencil):
            pencil_from_three(self.dx1, self.dx2, self.dx1 * 2, eta)

    def test_non_integrable_input_is_rejected_first(self):
        eta = wedge(self.dx1, self.dx2)
        with pytest.raises(NotIntegrable):
            pencil_from_three(self.dx1, self.dx2, self.dx3 + self.dx2 * self.x1, eta)


class TestThetaOnMembers(PencilFixtures):
    """Test suite for replaying the connection form on random members."""

    def pencils(self):
        u = self.x1 * self.x2 + 1
        return [
            Pencil(self.dx1, self.dx2),
            Pencil(self.dx1 * self.x2, self.dx2 * self.x1),
            Pencil(self.dx1, self.dx2 + self.dx1 * self.x2 ** 2),
            Pencil(self.dx1, self.dx2 * u),
            tangent_log_pencil(Eigenvalues.of([1, 2, 5])),
        ]

    def test_theta_holds_on_members(self):
        for p in self.pencils():
            checked = verify_theta_on_members(p, samples=10, seed=4)
            assert len(checked) == 10
            for a, b in checked:
                w = p.gen1.scale(a) + p.gen2.scale(b)
                assert ext_derivative(w) == wedge(p.theta, w)

    def test_replay_is_seeded(self):
        p = Pencil(self.dx1, self.dx2 + self.dx1 * self.x2 ** 2)
        assert verify_theta_on_members(p, seed=9) == verify_theta_on_members(p, seed=9)

    def test_reduced_member_has_another_connection_form(self):
        p = tangent_log_pencil(Eigenvalues.of([1, 2, 5]))
        reduced = member(p, 0, 1)
        assert reduced == self.dx1 * (self.x3 * 5) - self.dx3 * self.x1
        assert ext_derivative(reduced) != wedge(p.theta, reduced)


class TestClassification(PencilFixtures):
    """Test suite for classify and its certificates."""

    def test_flat_holomorphic(self):
        result = classify(Pencil(self.dx1, self.dx2))
        assert result.case == PencilCase.FLAT_HOLOMORPHIC
        assert result.theta.is_zero()
        assert result.theta_potential.is_zero()

    def test_flat_meromorphic(self):
        result = classify(Pencil(self.dx1 * self.x2, self.dx2 * self.x1))
        assert result.case == PencilCase.FLAT_MEROMORPHIC
        assert result.polar_locus == self.x1 * self.x2
        assert result.certificates

    def test_constant_curvature_has_closed_member(self):
        p = Pencil(self.dx1, self.dx2 + self.dx1 * self.x2 ** 2)
        assert p.theta == self.dx1 * (self.x2 * -2)
        assert curvature_factor(p).constant_value() == 2
        result = classify(p)
        assert result.case == PencilCase.CONSTANT_CURVATURE
        assert result.closed_member == self.dx1
        assert result.closed_member_potential == self.x1
        assert result.closed_member_parameters == (Q(1), Q(0))

    def test_nonconstant_curvature_first_integral(self):
        u = self.x1 * self.x2 + 1
        p = Pencil(self.dx1, self.dx2 * u)
        assert curvature_factor(p) == RatFunc(Poly.one(Q, 3) * -1, u ** 3)
        result = classify(p)
        assert result.case == PencilCase.NONCONSTANT_CURVATURE
        expected = RatFunc.from_poly((self.x2 ** 2 * u).scale(Q(Fraction(-1, 4))))
        assert result.axis_first_integral == expected
        assert is_axis_first_integral(p, expected)

    def test_flat_pencil_has_zero_curvature_factor(self):
        p = Pencil(self.dx1 * self.x2, self.dx2 * self.x1)
        assert curvature_factor(p).is_zero()


class TestMembers(PencilFixtures):
    """Test suite for members, axis 2-forms and logarithmic pencils."""

    def setup_method(self):
        super().setup_method()
        self.fs = [self.x1, self.x2, self.x3]
        self.p = log_pencil(self.fs, [1, 1, 0], [0, 1, 1])

    def test_log_generators(self):
        assert self.p.gen1 == (self.dx1 * self.x2 + self.dx2 * self.x1) * self.x3
        assert self.p.gen2 == (self.dx2 * self.x3 + self.dx3 * self.x2) * self.x1

    def test_log_axis_formula(self):
        formula = log_axis_formula(self.fs, [1, 1, 0], [0, 1, 1])
        assert wedge(self.p.gen1, self.p.gen2) == formula.scale(self.x1 * self.x2 * self.x3)

    def test_log_pencil_is_flat(self):
        result = classify(self.p)
        assert result.case == PencilCase.FLAT_MEROMORPHIC
        assert result.theta == self.dx1 / self.x1 + self.dx2 / self.x2 + self.dx3 / self.x3

    def test_log_pencil_arity(self):
        with pytest.raises(ArityMismatch):
            log_pencil(self.fs, [1, 1], [0, 1, 1])

    def test_exceptional_member(self):
        assert member_codim1_locus(self.p, 1, -1) == self.x2
        assert member_codim1_locus(self.p, 1, 1).is_constant()
        reduced = member(self.p, 1, -1)
        assert reduced.coefficient_gcd().is_constant()

    def test_zero_parameters(self):
        with pytest.raises(ZeroParameters):
            member(self.p, 0, 0)

    def test_axis_invariant_hypersurfaces(self):
        assert axis_2form(self.p).coefficient_gcd().is_constant()
        assert verify_axis_invariant_hypersurface(self.p, self.x1)
        assert not verify_axis_invariant_hypersurface(self.p, self.x1 + 1)

    def test_sampling_stays_within_cap(self):
        sample = sample_exceptional_parameters(self.p, samples=200, seed=3, cap=2)
        assert sample.tested == 200
        assert sample.within_cap
        assert all(slope == "-1" for _, slope in sample.exceptional)
        assert all(locus == "x2" for locus in sample.loci)

    def test_sampling_is_deterministic(self):
        first = sample_exceptional_parameters(self.p, samples=50, seed=5)
        second = sample_exceptional_parameters(self.p, samples=50, seed=5)
        assert first == second
