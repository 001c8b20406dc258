"""
Analysis of codimension-one foliations tangent to diagonal vector fields:
tangent logarithmic pencils, normal-form recognition in the given
coordinates, simple complex-hyperbolic checks, the Jouanolou example and
invariant hypersurfaces.
"""

from enum import Enum
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..algebra.linalg import nullspace
from ..algebra.polyalg import Poly, grlex_key
from ..algebra.scalars import FieldElement, NumberField
from ..errors import (
    ArityMismatch,
    BadDegree,
    CertificateFailure,
    NotIntegrable,
    NotPrimitive,
    NotStronglyDiagonalizable,
    NotTangent,
    ZeroEigenvalue,
    ZeroPolynomial,
)
from ..forms.exterior import (
    MeroForm,
    VectorField,
    directional_derivative,
    interior_product,
    is_integrable,
    is_tangent,
    wedge,
    ext_derivative,
)
from .blowup import axis_invariance
from .pencil import Pencil, log_pencil
from .resonance import Eigenvalues, is_strongly_diagonalizable, nonneg_resonance_search

logger = structlog.get_logger()


class NormalFormKind(str, Enum):
    """Lowest-order pattern matched by a 1-form."""
    FORM_I = "I"
    FORM_II = "II"
    NONE = "none"


class SimpleSingularityReport(BaseModel):
    """Outcome of normal-form recognition or a complex-hyperbolic check."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    matched_normal_form: NormalFormKind = NormalFormKind.NONE
    dimensional_type: Optional[int] = None
    variables: List[int] = Field(default_factory=list)
    residues: List[FieldElement] = Field(default_factory=list)
    unit: Optional[Poly] = None
    order: Optional[int] = None
    complex_hyperbolic: Optional[bool] = None
    resonance: Optional[Tuple[int, ...]] = None
    bound: Optional[int] = None
    strongly_diagonalizable: Optional[bool] = None
    notes: List[str] = Field(default_factory=list)


# ============ Logarithmic pencils ============

def residue_basis(a: Eigenvalues) -> List[List[FieldElement]]:
    """Basis (a2, -a1, 0), (a3, 0, -a1) of the residues b with sum(a_i b_i) = 0."""
    if len(a) != 3:
        raise ArityMismatch("tangent log pencils are built in three variables")
    if any(v.is_zero() for v in a.values):
        raise ZeroEigenvalue(f"eigenvalues {a} contain zero")
    a1, a2, a3 = a.values
    zero = a.field.zero()
    return [[a2, -a1, zero], [a3, zero, -a1]]


def tangent_log_pencil(a: Eigenvalues) -> Pencil:
    """Pencil of logarithmic forms along the coordinate planes tangent to diag(a)."""
    b1, b2 = residue_basis(a)
    coords = [Poly.variable(i, a.field, 3) for i in range(3)]
    pencil = log_pencil(coords, b1, b2)
    X = VectorField.diagonal(a.values)
    for w in (pencil.gen1, pencil.gen2):
        if not is_tangent(X, w):
            raise CertificateFailure("log form is not tangent to the diagonal field", f"i_X({w}) = 0")
    return pencil


def log_form(residues: Sequence[FieldElement]) -> MeroForm:
    """x1*x2*x3 * sum(b_k dx_k / x_k) for coordinate germs."""
    field = residues[0].field
    n = len(residues)
    coeffs = {}
    for k, b in enumerate(residues):
        mono = tuple(0 if j == k else 1 for j in range(n))
        coeffs[(k,)] = Poly.monomial(mono, field, b)
    return MeroForm(1, n, field, coeffs)


# ============ Normal forms ============

def _monomial(indices: Sequence[int], n: int) -> Tuple[int, ...]:
    return tuple(1 if j in indices else 0 for j in range(n))


def _patterns(n: int) -> List[Tuple[NormalFormKind, Dict[int, Tuple[int, ...]]]]:
    """Candidate shapes: form II on all three variables, then form I on each pair."""
    out: List[Tuple[NormalFormKind, Dict[int, Tuple[int, ...]]]] = [
        (NormalFormKind.FORM_II, {k: _monomial([j for j in range(n) if j != k], n) for k in range(n)})
    ]
    for i in range(n):
        for j in range(i + 1, n):
            out.append((NormalFormKind.FORM_I, {i: _monomial([j], n), j: _monomial([i], n)}))
    return out


def _match_pattern(
    comps: List[Poly], pattern: Dict[int, Tuple[int, ...]], order: int
) -> Optional[Tuple[List[FieldElement], Poly]]:
    """Residues and unit (truncated) when w = u * pattern up to the given order."""
    n = len(comps)
    field = comps[0].field
    residues: List[FieldElement] = []
    unit: Optional[Poly] = None
    shift = sum(next(iter(pattern.values())))
    for k in range(n):
        if k not in pattern:
            if not comps[k].truncate(order + shift).is_zero():
                return None
            continue
        wk = comps[k]
        if wk.is_zero():
            return None
        mono = pattern[k]
        initial = wk.initial_part()
        if list(initial.terms) != [mono]:
            return None
        c = initial.terms[mono]
        shifted = wk.try_divide(Poly.monomial(mono, field))
        if shifted is None:
            return None
        uk = shifted.scale(c.inverse()).truncate(order)
        if unit is None:
            unit = uk
        elif uk != unit:
            return None
        residues.append(c)
    if unit is None or unit.constant_term().is_zero():
        return None
    return residues, unit


def recognize_normal_form(w: MeroForm, a: Eigenvalues, order: int, strict: bool = True) -> SimpleSingularityReport:
    """
    Decide whether w = u * (form II) or u * (form I on a pair of variables)
    for a unit u, comparing up to the given truncation order.
    """
    if w.degree != 1 or w.nvars != 3 or len(a) != 3:
        raise ArityMismatch("normal forms are recognized for 1-forms in three variables")
    comps = [c.as_poly() for c in w.components()]
    diagonalizable = is_strongly_diagonalizable(a)
    report = SimpleSingularityReport(order=order, strongly_diagonalizable=diagonalizable)
    if not diagonalizable:
        if strict:
            raise NotStronglyDiagonalizable(f"eigenvalues {a} admit an integer relation")
        report.notes.append("eigenvalues are not strongly non-resonant")
    X = VectorField.diagonal(a.values)
    if not is_tangent(X, w):
        raise NotTangent(f"diag{a} is not tangent to {w}")
    if not is_integrable(w):
        raise NotIntegrable(f"{w} is not integrable")
    g = w.coefficient_gcd()
    if g.constant_term().is_zero():
        raise NotPrimitive(f"coefficients of {w} share the factor {g}")

    for kind, pattern in _patterns(3):
        matched = _match_pattern(comps, pattern, order)
        if matched is None:
            continue
        residues, unit = matched
        report.matched_normal_form = kind
        report.variables = sorted(pattern)
        report.dimensional_type = len(pattern)
        report.residues = residues
        report.unit = unit
        break
    else:
        report.notes.append(f"no normal form matched up to order {order}")
    logger.debug("normal form recognition", matched=report.matched_normal_form.value, order=order)
    return report


def simple_ch_check(w: MeroForm, bound: int) -> SimpleSingularityReport:
    """
    Compare the lowest-order part of w with the simple complex-hyperbolic
    patterns for tau = 3 and tau = 2, then search nonnegative resonances of
    the residues up to the bound.
    """
    if w.degree != 1:
        raise ArityMismatch("simple singularities are checked on 1-forms")
    comps = [c.as_poly() for c in w.components()]
    n = w.nvars
    report = SimpleSingularityReport(bound=bound)
    nonzero = [c for c in comps if not c.is_zero()]
    if not nonzero:
        report.notes.append("zero form")
        return report
    nu = min(c.order() for c in nonzero)
    initial = [c.homogeneous_part(nu) for c in comps]

    candidates: List[Tuple[List[int], Dict[int, Tuple[int, ...]]]] = []
    if n == 3 and nu == 2:
        candidates.append(([0, 1, 2], {k: _monomial([j for j in range(3) if j != k], 3) for k in range(3)}))
    if nu == 1:
        for i in range(n):
            for j in range(i + 1, n):
                candidates.append(([i, j], {i: _monomial([j], n), j: _monomial([i], n)}))

    for variables, pattern in candidates:
        residues: List[FieldElement] = []
        ok = True
        for k in range(n):
            part = initial[k]
            if k not in pattern:
                if not part.is_zero():
                    ok = False
                    break
                continue
            if list(part.terms) != [pattern[k]]:
                ok = False
                break
            residues.append(part.terms[pattern[k]])
        if not ok:
            continue
        relation = nonneg_resonance_search(Eigenvalues(values=tuple(residues)), bound)
        report.matched_normal_form = NormalFormKind.FORM_II if len(variables) == 3 else NormalFormKind.FORM_I
        report.dimensional_type = len(variables)
        report.variables = variables
        report.residues = residues
        report.resonance = relation
        report.complex_hyperbolic = relation is None
        return report
    report.complex_hyperbolic = False
    report.notes.append("lowest-order part matches no simple complex-hyperbolic pattern")
    return report


# ============ Jouanolou ============

def jouanolou_field(m: int, field: Optional[NumberField] = None) -> VectorField:
    """x3^m d/dx1 + x1^m d/dx2 + x2^m d/dx3."""
    if m < 2:
        raise BadDegree(f"Jouanolou degree must be at least 2, got {m}")
    field = field or NumberField.rationals()
    x1, x2, x3 = (Poly.variable(i, field, 3) for i in range(3))
    return VectorField([x3 ** m, x1 ** m, x2 ** m], field)


def jouanolou(m: int, field: Optional[NumberField] = None) -> Tuple[VectorField, MeroForm]:
    """The Jouanolou field and the 1-form i_R i_X (dx1 ∧ dx2 ∧ dx3)."""
    X = jouanolou_field(m, field)
    R = VectorField.radial(X.field, 3)
    omega = interior_product(R, interior_product(X, MeroForm.volume(3, X.field)))
    if not interior_product(X, omega).is_zero():
        raise CertificateFailure("Jouanolou form is not tangent to X", "i_X(omega) = 0")
    if not interior_product(R, omega).is_zero():
        raise CertificateFailure("Jouanolou form is not tangent to R", "i_R(omega) = 0")
    if not wedge(omega, ext_derivative(omega)).is_zero():
        raise CertificateFailure("Jouanolou form is not integrable", "omega ∧ d(omega) = 0")
    return X, omega


# ============ Invariant hypersurfaces ============

def invariant_hypersurface_check(X: VectorField, f: Poly) -> bool:
    """{f = 0} is invariant iff f divides X(f)."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial defines no hypersurface")
    Xf = directional_derivative(X, f).as_poly()
    return Xf.try_divide(f) is not None


class InvariantHypersurface(BaseModel):
    """A polynomial with X(f) = cofactor * f."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    polynomial: Poly
    cofactor: Poly
    first_integral: bool


def _monomials_of_degree(d: int, n: int) -> List[Tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        out.append(tuple(combo.count(i) for i in range(n)))
    return sorted(out, key=grlex_key, reverse=True)


def invariant_hypersurface_candidates(X: VectorField, degree_cap: int) -> List[InvariantHypersurface]:
    """
    Homogeneous f of degree <= cap with X(f) = c * x^beta * f.

    The pairs (beta, c) are read off the images X(x^mu) of the monomials;
    the pair (0, 0) adds first integrals. Each pair is a linear system in
    the coefficients of f, solved exactly.
    """
    if degree_cap < 1:
        raise BadDegree("degree cap must be at least 1")
    field, n = X.field, X.nvars
    X.polynomial_components()
    found: List[InvariantHypersurface] = []
    seen = set()
    for d in range(1, degree_cap + 1):
        monos = _monomials_of_degree(d, n)
        images = {mu: directional_derivative(X, Poly.monomial(mu, field)).as_poly() for mu in monos}
        pairs: List[Tuple[Tuple[int, ...], FieldElement]] = [((0,) * n, field.zero())]
        for mu, image in images.items():
            for nu, c in image.terms.items():
                if all(a >= b for a, b in zip(nu, mu)):
                    pair = (tuple(a - b for a, b in zip(nu, mu)), c)
                    if pair not in pairs:
                        pairs.append(pair)
        for beta, c in pairs:
            cofactor = Poly.monomial(beta, field, c) if c else Poly.zero(field, n)
            columns = [images[mu] - cofactor.mul_monomial(mu) for mu in monos]
            rows_index: Dict[Tuple[int, ...], int] = {}
            for col in columns:
                for nu in col.terms:
                    rows_index.setdefault(nu, len(rows_index))
            rows = [[field.zero()] * len(monos) for _ in rows_index]
            for j, col in enumerate(columns):
                for nu, v in col.terms.items():
                    rows[rows_index[nu]][j] = v
            for vector in nullspace(rows, len(monos), field.zero(), field.one()):
                f = Poly(field, n, {mu: v for mu, v in zip(monos, vector)}).monic()
                if f.is_zero() or f in seen:
                    continue
                if not invariant_hypersurface_check(X, f):
                    raise CertificateFailure("search produced a non-invariant polynomial", str(f))
                seen.add(f)
                found.append(InvariantHypersurface(polynomial=f, cofactor=cofactor, first_integral=not c))
        logger.debug("invariant hypersurface search", degree=d, pairs=len(pairs), found=len(found))
    return found


def invariant_hypersurface_search(X: VectorField, degree_cap: int) -> List[Poly]:
    return [h.polynomial for h in invariant_hypersurface_candidates(X, degree_cap)]


def invariant_axes(X: VectorField) -> List[int]:
    """Coordinate axes left invariant by X."""
    return [i for i in range(X.nvars) if axis_invariance(X, i)]
