"""
Strict transforms of vector fields and 1-forms under blow-up charts,
with the exceptional multiplicity and dicriticality of each transform.
"""

from typing import List, Optional, Union

import structlog
from pydantic import BaseModel, ConfigDict

from ..algebra.polyalg import Poly, RatFunc, poly_gcd_many, poly_lcm
from ..errors import ArityMismatch, ZeroField, ZeroForm
from ..forms.exterior import MeroForm, VectorField, directional_derivative, pullback
from .charts import BlowupChart, charts_for, BlowupKind

logger = structlog.get_logger()


class StrictTransformResult(BaseModel):
    """Strict transform in one chart."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    chart: BlowupChart
    object: Union[VectorField, MeroForm]
    exceptional_multiplicity: int
    dicritical: bool


def _divides_by_variable(p: Poly, index: int) -> bool:
    return p.is_zero() or p.min_degree_in(index) > 0


def transform_vector_field(X: VectorField, chart: BlowupChart) -> StrictTransformResult:
    """
    Push X through the chart: each new coordinate y_i = psi_i(x) gives the
    component X(psi_i) rewritten in y. Denominators are cleared and the
    gcd of the components divided out.

    The multiplicity is the power of x_chart divided out, so it is never
    negative. A field regular at the origin picks up a pole along the
    exceptional divisor that clearing denominators absorbs; it reports 0.
    """
    if X.nvars != 3:
        raise ArityMismatch("blow-ups are defined in three variables")
    if X.is_zero():
        raise ZeroField("strict transform of the zero vector field")
    field = X.field
    images = chart.substitution(field)
    assignments = list(enumerate(images))
    pushed: List[RatFunc] = []
    for psi in chart.inverse_substitution(field):
        pushed.append(directional_derivative(X, psi).substitute(assignments))
    L = Poly.one(field, 3)
    for comp in pushed:
        if not comp.is_polynomial():
            L = poly_lcm(L, comp.den)
    cleared = [(comp * L).as_poly() for comp in pushed]
    g = poly_gcd_many(cleared)
    strict = [c.exact_quotient(g) for c in cleared]
    c = chart.chart
    multiplicity = max(0, g.min_degree_in(c) - L.min_degree_in(c))
    dicritical = not _divides_by_variable(strict[c], c)
    logger.debug("vector field strict transform", chart=chart.label, multiplicity=multiplicity, dicritical=dicritical)
    return StrictTransformResult(
        chart=chart,
        object=VectorField(strict, field),
        exceptional_multiplicity=multiplicity,
        dicritical=dicritical,
    )


def transform_form(w: MeroForm, chart: BlowupChart) -> StrictTransformResult:
    """
    Pull a polynomial 1-form back through the chart and divide by the gcd
    of its coefficients. The exceptional divisor is invariant iff every
    coefficient other than that of dy_chart vanishes on it.
    """
    if w.nvars != 3 or w.degree != 1:
        raise ArityMismatch("blow-ups act on 1-forms in three variables")
    if w.is_zero():
        raise ZeroForm("strict transform of the zero form")
    w.polynomial_coefficients()
    pulled = pullback(w, chart.substitution(w.field))
    g = pulled.coefficient_gcd()
    coeffs = {k: c.exact_quotient(g) for k, c in pulled.polynomial_coefficients().items()}
    strict = MeroForm(1, 3, w.field, coeffs).normalized()
    c = chart.chart
    dicritical = any(
        not _divides_by_variable(p, c)
        for (i,), p in strict.polynomial_coefficients().items()
        if i != c
    )
    multiplicity = g.min_degree_in(c)
    logger.debug("form strict transform", chart=chart.label, multiplicity=multiplicity, dicritical=dicritical)
    return StrictTransformResult(
        chart=chart,
        object=strict,
        exceptional_multiplicity=multiplicity,
        dicritical=dicritical,
    )


def transform_all_charts(
    obj: Union[VectorField, MeroForm],
    kind: BlowupKind,
    axis: Optional[int] = None,
) -> List[StrictTransformResult]:
    """Strict transforms in every chart of the given kind."""
    transform = transform_vector_field if isinstance(obj, VectorField) else transform_form
    return [transform(obj, chart) for chart in charts_for(kind, axis)]


def axis_invariance(X: VectorField, axis: int) -> bool:
    """
    The x_axis coordinate axis is invariant iff every other component
    vanishes on it, i.e. has no term involving x_axis alone.
    """
    if X.nvars != 3:
        raise ArityMismatch("axis invariance is defined in three variables")
    for k, comp in enumerate(X.polynomial_components()):
        if k == axis:
            continue
        for mono in comp.terms:
            if all(e == 0 for j, e in enumerate(mono) if j != axis):
                return False
    return True


def linear_diagonal(X: VectorField) -> Optional[List]:
    """
    Diagonal entries of the linear part of X when that linear part is
    diagonal, otherwise None.
    """
    n = X.nvars
    out = []
    for i, comp in enumerate(X.polynomial_components()):
        linear = comp.homogeneous_part(1)
        if comp.constant_term():
            return None
        for mono in linear.terms:
            if mono[i] != 1:
                return None
        unit = tuple(1 if j == i else 0 for j in range(n))
        out.append(linear.coefficient(unit))
    return out
