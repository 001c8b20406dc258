"""Exact scalars, polynomials and rational functions."""

from .scalars import (
    FieldElement,
    IntegerRelationBasis,
    NumberField,
    fe_add,
    fe_inverse,
    fe_mul,
    q_linear_relation_lattice,
)
from .polyalg import (
    Poly,
    RatFunc,
    divides,
    grlex_key,
    initial_part,
    partial_derivative,
    poly_arith,
    poly_gcd,
    poly_gcd_many,
    poly_lcm,
    substitute,
    truncate,
)

__all__ = [
    "FieldElement",
    "IntegerRelationBasis",
    "NumberField",
    "fe_add",
    "fe_inverse",
    "fe_mul",
    "q_linear_relation_lattice",
    "Poly",
    "RatFunc",
    "divides",
    "grlex_key",
    "initial_part",
    "partial_derivative",
    "poly_arith",
    "poly_gcd",
    "poly_gcd_many",
    "poly_lcm",
    "substitute",
    "truncate",
]
