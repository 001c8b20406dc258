"""Differential forms and vector fields."""

from .exterior import (
    MeroForm,
    VectorField,
    differential,
    directional_derivative,
    ext_derivative,
    interior_product,
    is_first_integral,
    is_integrable,
    is_tangent,
    potential,
    pullback,
    remove_codim1,
    wedge,
)

__all__ = [
    "MeroForm",
    "VectorField",
    "differential",
    "directional_derivative",
    "ext_derivative",
    "interior_product",
    "is_first_integral",
    "is_integrable",
    "is_tangent",
    "potential",
    "pullback",
    "remove_codim1",
    "wedge",
]
