"""
Pencils of integrable 1-forms.

A pencil is spanned by two independent integrable polynomial 1-forms
w1, w2 satisfying w1 ∧ dw2 + w2 ∧ dw1 = 0, so that every member
a*w1 + b*w2 is integrable. Its connection form theta satisfies
dw = theta ∧ w for every member; the curvature d(theta) drives the
classification below, and every classification result carries a
certificate that is re-verified before it is returned.
"""

import random
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..algebra.polyalg import Poly, RatFunc, poly_lcm
from ..algebra.scalars import FieldElement
from ..errors import (
    ArityMismatch,
    CertificateFailure,
    DegenerateGenerators,
    DegeneratePencil,
    NotAPencil,
    NotCoplanar,
    NotIntegrable,
    NotPolynomial,
    NotTangentToEta,
    ZeroForm,
    ZeroParameters,
)
from ..forms.exterior import (
    MeroForm,
    VectorField,
    differential,
    ext_derivative,
    interior_product,
    is_integrable,
    potential,
    remove_codim1,
    wedge,
)

logger = structlog.get_logger()


def pencil_condition(w1: MeroForm, w2: MeroForm) -> bool:
    """w1 ∧ dw2 + w2 ∧ dw1 == 0."""
    if w1.degree != 1 or w2.degree != 1:
        raise ArityMismatch("the pencil condition is stated for 1-forms")
    return (wedge(w1, ext_derivative(w2)) + wedge(w2, ext_derivative(w1))).is_zero()


def decompose_over_pair(w3: MeroForm, w1: MeroForm, w2: MeroForm) -> Tuple[RatFunc, RatFunc]:
    """
    Write w3 = l1*w1 + l2*w2.

    l1 and l2 are read off one coefficient of w3∧w2 and w1∧w3 against the
    same coefficient of w1∧w2, then the identity is checked exactly.
    """
    w12 = wedge(w1, w2)
    if w12.is_zero():
        raise DegenerateGenerators("w1 ∧ w2 vanishes identically")
    index = min(w12.coeffs)
    pivot = w12.coeffs[index]
    l1 = wedge(w3, w2).coefficient(index) / pivot
    l2 = wedge(w1, w3).coefficient(index) / pivot
    residual = w3 - w1.scale(l1) - w2.scale(l2)
    if not residual.is_zero():
        raise NotCoplanar(f"{w3} is not a combination of {w1} and {w2}")
    return l1, l2


def _theta_for(w: MeroForm, variable_choice: str) -> MeroForm:
    """-i_Y dw for Y = (1/c) d/dx_j, c the first (or last) nonzero coefficient of w."""
    comps = w.components()
    nonzero = [j for j, c in enumerate(comps) if c]
    if not nonzero:
        raise ZeroForm("connection form of the zero form")
    j = nonzero[0] if variable_choice == "first" else nonzero[-1]
    Y = VectorField.coordinate(j, w.field, w.nvars).scale(comps[j].reciprocal())
    return -interior_product(Y, ext_derivative(w))


def _connection_form(w1: MeroForm, w2: MeroForm, variable_choice: str = "first") -> MeroForm:
    theta1 = _theta_for(w1, variable_choice)
    theta2 = _theta_for(w2, variable_choice)
    diff = theta1 - theta2
    if diff.is_zero():
        theta = theta1
    else:
        try:
            l1, _ = decompose_over_pair(diff, w1, w2)
        except NotCoplanar as exc:
            raise CertificateFailure("connection forms of the generators do not agree", str(diff)) from exc
        theta = theta1 - w1.scale(l1)
    for w in (w1, w2):
        if ext_derivative(w) != wedge(theta, w):
            raise CertificateFailure("connection form check failed", f"d({w}) = theta ∧ ({w})")
    return theta


class Pencil:
    """
    Pencil generated by two polynomial 1-forms; immutable, with the
    connection form computed on construction.
    """

    __slots__ = ("gen1", "gen2", "theta", "nvars", "field")

    def __init__(self, gen1: MeroForm, gen2: MeroForm):
        if gen1.degree != 1 or gen2.degree != 1:
            raise ArityMismatch("pencil generators must be 1-forms")
        if gen1.nvars != gen2.nvars:
            raise ArityMismatch(f"{gen1.nvars} vs {gen2.nvars} variables")
        if gen1.nvars < 3:
            raise ArityMismatch("pencils need at least three variables")
        if not gen1.is_polynomial() or not gen2.is_polynomial():
            raise NotPolynomial("pencil generators must have polynomial coefficients")
        if wedge(gen1, gen2).is_zero():
            raise DegeneratePencil("generators are dependent")
        if not is_integrable(gen1) or not is_integrable(gen2):
            raise NotAPencil("generators must be integrable")
        if not pencil_condition(gen1, gen2):
            raise NotAPencil("generators violate the pencil condition")
        self.gen1 = gen1
        self.gen2 = gen2
        self.nvars = gen1.nvars
        self.field = gen1.field
        self.theta = _connection_form(gen1, gen2)
        logger.debug("pencil constructed", nvars=self.nvars, theta=str(self.theta))

    def __str__(self) -> str:
        return f"pencil({self.gen1}, {self.gen2})"

    def __repr__(self) -> str:
        return f"Pencil({self.gen1!r}, {self.gen2!r})"


def _combination(p: Pencil, a: FieldElement, b: FieldElement) -> MeroForm:
    a, b = p.field(a), p.field(b)
    if a.is_zero() and b.is_zero():
        raise ZeroParameters("(a, b) = (0, 0) is not a member")
    return p.gen1.scale(a) + p.gen2.scale(b)


def member(p: Pencil, a: FieldElement, b: FieldElement) -> MeroForm:
    """a*gen1 + b*gen2 with its codimension-one part divided out."""
    return remove_codim1(_combination(p, a, b))[0]


def member_codim1_locus(p: Pencil, a: FieldElement, b: FieldElement) -> Poly:
    """Gcd of the coefficients of a*gen1 + b*gen2; a unit iff Sing has codim >= 2."""
    return _combination(p, a, b).coefficient_gcd()


def pencil_from_three(w1: MeroForm, w2: MeroForm, w3: MeroForm, eta: MeroForm) -> Pencil:
    """
    Pencil containing w1, w2, w3 (up to multiplication by functions),
    for three forms tangent to the 2-form eta.

    Local decomposability of eta off its singular set is assumed.
    """
    if eta.is_zero():
        raise ZeroForm("eta must be nonzero")
    for w in (w1, w2, w3):
        if not w.is_polynomial():
            raise NotPolynomial(f"{w} has non-polynomial coefficients")
        if not is_integrable(w):
            raise NotIntegrable(f"{w} is not integrable")
        if not wedge(eta, w).is_zero():
            raise NotTangentToEta(f"eta ∧ ({w}) does not vanish")
    l1, l2 = decompose_over_pair(w3, w1, w2)
    if l1.is_zero() or l2.is_zero():
        raise DegeneratePencil("w3 is proportional to one of w1, w2")
    phi = poly_lcm(l1.den, l2.den)
    eta1 = w1.scale(phi.exact_quotient(l1.den) * l1.num)
    eta2 = w2.scale(phi.exact_quotient(l2.den) * l2.num)
    if wedge(eta1, eta2).is_zero():
        raise DegeneratePencil("constructed generators are dependent")
    logger.info("pencil from three forms", phi=str(phi))
    return Pencil(eta1, eta2)


def axis_2form(p: Pencil) -> MeroForm:
    """gen1 ∧ gen2 with the gcd of its coefficients removed."""
    return remove_codim1(wedge(p.gen1, p.gen2))[0]


def connection_form(p: Pencil, variable_choice: str = "first") -> MeroForm:
    """
    theta with dw = theta ∧ w on the pencil. `variable_choice="last"`
    rebuilds it from the other end of the coefficient list.
    """
    if variable_choice == "first":
        return p.theta
    if variable_choice != "last":
        raise ValueError(f"variable_choice must be 'first' or 'last', got {variable_choice!r}")
    return _connection_form(p.gen1, p.gen2, "last")


def verify_theta_on_members(
    p: Pencil,
    samples: int = 10,
    seed: int = 0,
    parameter_range: int = 9,
) -> List[Tuple[FieldElement, FieldElement]]:
    """
    Replay dw = theta ∧ w on seeded random members a*gen1 + b*gen2.

    The raw combination is used: dividing out a codimension-one factor
    changes the connection form of the member.
    """
    rng = random.Random(seed)
    choices = [v for v in range(-parameter_range, parameter_range + 1) if v]
    checked: List[Tuple[FieldElement, FieldElement]] = []
    for _ in range(samples):
        a, b = p.field(rng.choice(choices)), p.field(rng.choice(choices))
        w = _combination(p, a, b)
        if ext_derivative(w) != wedge(p.theta, w):
            raise CertificateFailure("connection form check failed on a member", f"d({w}) = theta ∧ ({w})")
        checked.append((a, b))
    logger.debug("theta replayed on members", samples=samples, seed=seed)
    return checked


def theta_is_unique(p: Pencil) -> bool:
    return connection_form(p, "first") == connection_form(p, "last")


def curvature(p: Pencil) -> MeroForm:
    return ext_derivative(p.theta)


def curvature_factor(p: Pencil) -> RatFunc:
    """alpha with d(theta) = alpha * gen1 ∧ gen2; zero for flat pencils."""
    k = curvature(p)
    if k.is_zero():
        return RatFunc.zero(p.field, p.nvars)
    w12 = wedge(p.gen1, p.gen2)
    index = min(w12.coeffs)
    alpha = k.coefficient(index) / w12.coeffs[index]
    if k != w12.scale(alpha):
        raise CertificateFailure("curvature is not a multiple of gen1 ∧ gen2", f"d(theta) = {k}")
    return alpha


# ============ Classification ============

class PencilCase(str, Enum):
    """Branch of the classification."""
    FLAT_MEROMORPHIC = "FlatMeromorphic"
    FLAT_HOLOMORPHIC = "FlatHolomorphicFirstIntegral"
    CONSTANT_CURVATURE = "ConstantCurvatureFactor"
    NONCONSTANT_CURVATURE = "NonconstantCurvatureFactor"


class PencilClassification(BaseModel):
    """Classification result with the objects that certify it."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    case: PencilCase
    theta: MeroForm
    theta_potential: Optional[Poly] = None
    polar_locus: Optional[Poly] = None
    alpha: Optional[RatFunc] = None
    mu1: Optional[RatFunc] = None
    mu2: Optional[RatFunc] = None
    k1: Optional[RatFunc] = None
    k2: Optional[RatFunc] = None
    axis_first_integral: Optional[RatFunc] = None
    closed_member: Optional[MeroForm] = None
    closed_member_parameters: Optional[Tuple[FieldElement, FieldElement]] = None
    closed_member_potential: Optional[Poly] = None
    certificates: List[str] = Field(default_factory=list)


def is_axis_first_integral(p: Pencil, phi: RatFunc) -> bool:
    """d(phi) ∧ gen1 ∧ gen2 == 0."""
    return wedge(differential(phi), wedge(p.gen1, p.gen2)).is_zero()


def _require(condition: bool, message: str, identity: str) -> str:
    if not condition:
        raise CertificateFailure(message, identity)
    return identity


def _closed_member(p: Pencil, a: FieldElement, b: FieldElement, out: PencilClassification) -> PencilClassification:
    closed = p.gen1.scale(a) + p.gen2.scale(b)
    out.certificates.append(_require(ext_derivative(closed).is_zero(), "member is not closed", f"d({closed}) = 0"))
    out.closed_member = closed
    out.closed_member_parameters = (a, b)
    if closed.is_polynomial():
        h = potential(closed)
        out.closed_member_potential = h
        out.certificates.append(f"d({h}) = {closed}")
    return out


def classify(p: Pencil) -> PencilClassification:
    """
    Flat pencils report theta (with a polynomial potential when theta is
    holomorphic). Otherwise d(theta) = alpha * gen1 ∧ gen2: a constant
    alpha yields a first integral of the axis or a closed member, a
    non-constant alpha yields a first integral built from alpha.
    """
    theta = p.theta
    dtheta = ext_derivative(theta)
    if dtheta.is_zero():
        if theta.is_polynomial():
            h = potential(theta) if not theta.is_zero() else Poly.zero(p.field, p.nvars)
            out = PencilClassification(case=PencilCase.FLAT_HOLOMORPHIC, theta=theta, theta_potential=h)
            out.certificates.append(_require(differential(h) == theta, "potential check failed", f"d({h}) = theta"))
        else:
            _, polar = theta.clear_denominators()
            out = PencilClassification(case=PencilCase.FLAT_MEROMORPHIC, theta=theta, polar_locus=polar)
            out.certificates.append("d(theta) = 0")
        logger.info("pencil classified", case=out.case.value)
        return out

    alpha = curvature_factor(p)
    one = p.field.one()
    if alpha.is_constant():
        try:
            mu1, mu2 = decompose_over_pair(theta, p.gen1, p.gen2)
        except NotCoplanar as exc:
            raise CertificateFailure("theta is not in the span of the generators", str(theta)) from exc
        out = PencilClassification(
            case=PencilCase.CONSTANT_CURVATURE, theta=theta, alpha=alpha, mu1=mu1, mu2=mu2
        )
        if mu1.is_zero():
            out = _closed_member(p, p.field.zero(), one, out)
        else:
            ratio = mu2 / mu1
            if ratio.is_constant():
                out = _closed_member(p, one, ratio.constant_value(), out)
            else:
                out.axis_first_integral = ratio
                out.certificates.append(
                    _require(is_axis_first_integral(p, ratio), "axis first integral check failed",
                             f"d({ratio}) ∧ gen1 ∧ gen2 = 0")
                )
        logger.info("pencil classified", case=out.case.value, alpha=str(alpha))
        return out

    beta = differential(alpha).scale((alpha * 2).reciprocal()) + theta
    try:
        k1, k2 = decompose_over_pair(beta, p.gen1, p.gen2)
    except NotCoplanar as exc:
        raise CertificateFailure("d(alpha)/(2 alpha) + theta is not in the span of the generators", str(beta)) from exc
    out = PencilClassification(case=PencilCase.NONCONSTANT_CURVATURE, theta=theta, alpha=alpha, k1=k1, k2=k2)
    for k in (k1, k2):
        if k.is_zero():
            continue
        phi = k * k / alpha
        if phi.is_constant():
            continue
        out.axis_first_integral = phi
        out.certificates.append(
            _require(is_axis_first_integral(p, phi), "axis first integral check failed",
                     f"d({phi}) ∧ gen1 ∧ gen2 = 0")
        )
        logger.info("pencil classified", case=out.case.value, first_integral=str(phi))
        return out
    raise CertificateFailure("no non-constant first integral among k1^2/alpha, k2^2/alpha", f"alpha = {alpha}")


def verify_axis_invariant_hypersurface(p: Pencil, f: Poly) -> bool:
    """f divides every coefficient of df ∧ axis_2form(p)."""
    if f.is_zero():
        raise ZeroForm("the zero polynomial defines no hypersurface")
    three = wedge(differential(f), axis_2form(p))
    return all(c.try_divide(f) is not None for c in three.polynomial_coefficients().values())


# ============ Logarithmic pencils ============

def _log_form(fs: Sequence[Poly], residues: Sequence[FieldElement]) -> MeroForm:
    """(prod f) * sum(r_i df_i / f_i), with the product cleared."""
    field, n = fs[0].field, fs[0].nvars
    total = MeroForm.zero(1, n, field)
    for i, (f, r) in enumerate(zip(fs, residues)):
        r = field(r)
        if r.is_zero():
            continue
        others = Poly.one(field, n)
        for j, g in enumerate(fs):
            if j != i:
                others = others * g
        total = total + differential(f).scale(others * r)
    return total


def log_pencil(fs: Sequence[Poly], lambdas: Sequence[FieldElement], mus: Sequence[FieldElement]) -> Pencil:
    """Pencil of logarithmic forms with residue vectors lambdas and mus along fs."""
    if not (len(fs) == len(lambdas) == len(mus)) or len(fs) < 2:
        raise ArityMismatch("log pencils need matching germ and residue lists")
    return Pencil(_log_form(fs, lambdas), _log_form(fs, mus))


def log_axis_formula(fs: Sequence[Poly], lambdas: Sequence[FieldElement], mus: Sequence[FieldElement]) -> MeroForm:
    """sum over i<j of (l_i m_j - l_j m_i) h_ij df_i ∧ df_j, h_ij the product of the other germs."""
    field, n = fs[0].field, fs[0].nvars
    total = MeroForm.zero(2, n, field)
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            c = field(lambdas[i]) * field(mus[j]) - field(lambdas[j]) * field(mus[i])
            if c.is_zero():
                continue
            h = Poly.one(field, n)
            for k, g in enumerate(fs):
                if k not in (i, j):
                    h = h * g
            total = total + wedge(differential(fs[i]), differential(fs[j])).scale(h * c)
    return total


# ============ Exceptional parameters ============

class ParameterSample(BaseModel):
    """Outcome of sampling members for non-unit codimension-one loci."""
    tested: int
    exceptional: List[Tuple[str, str]] = Field(default_factory=list)
    loci: List[str] = Field(default_factory=list)
    cap: int
    within_cap: bool = True


def sample_exceptional_parameters(
    p: Pencil,
    samples: int,
    seed: int,
    parameter_range: int = 9,
    cap: int = 2,
) -> ParameterSample:
    """
    Draw (a, b) with nonzero integer entries in [-range, range] and record
    the distinct points (1 : b/a) whose member has a non-unit gcd.
    """
    rng = random.Random(seed)
    choices = [v for v in range(-parameter_range, parameter_range + 1) if v]
    seen = {}
    for _ in range(samples):
        a, b = rng.choice(choices), rng.choice(choices)
        slope = p.field(b) / p.field(a)
        if slope in seen:
            continue
        locus = member_codim1_locus(p, p.field(a), p.field(b))
        seen[slope] = None if locus.is_constant() else str(locus)
    exceptional = [(str(p.field.one()), str(s)) for s, locus in seen.items() if locus is not None]
    loci = [locus for locus in seen.values() if locus is not None]
    logger.debug("sampled pencil members", samples=samples, distinct=len(seen), exceptional=len(exceptional))
    return ParameterSample(
        tested=samples,
        exceptional=exceptional,
        loci=loci,
        cap=cap,
        within_cap=len(exceptional) <= cap,
    )
