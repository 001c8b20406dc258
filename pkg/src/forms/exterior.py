"""
Exterior calculus on germs at the origin.

MeroForm stores a k-form as a sparse map from strictly increasing
0-based index tuples to RatFunc coefficients; VectorField stores the n
components of a derivation. Both are immutable values.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.polyalg import Poly, RatFunc, poly_gcd_many, poly_lcm
from ..algebra.scalars import FieldElement, NumberField
from ..errors import (
    ArityMismatch,
    DegreeZero,
    IndexOutOfRange,
    NotClosed,
    NotPolynomial,
    ZeroForm,
)

Index = Tuple[int, ...]
Coefficient = Union[RatFunc, Poly, FieldElement, int, Fraction]


def _sign_of_merge(left: Index, right: Index) -> int:
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


def _basis_string(index: Index) -> str:
    return "∧".join(f"d(x{i + 1})" for i in index)


def _coefficient_string(c: RatFunc) -> Tuple[bool, str]:
    """Return (negative, text) for a coefficient printed before a basis element."""
    if c.is_polynomial() and len(c.num.terms) == 1:
        ((mono, v),) = c.num.terms.items()
        if v.is_rational() and v.to_rational() < 0:
            c = -c
            negative = True
        else:
            negative = False
        s = str(c)
        return negative, "" if s == "1" else s
    s = str(c)
    return False, f"({s})"


class MeroForm:
    """Meromorphic differential form of fixed degree in n variables."""

    __slots__ = ("degree", "nvars", "field", "coeffs")

    def __init__(
        self,
        degree: int,
        nvars: int,
        field: NumberField,
        coeffs: Optional[Mapping[Index, Coefficient]] = None,
    ):
        if not 0 <= degree:
            raise ArityMismatch(f"negative form degree {degree}")
        clean: Dict[Index, RatFunc] = {}
        for index, c in (coeffs or {}).items():
            index = tuple(index)
            if len(index) != degree:
                raise ArityMismatch(f"index {index} does not have {degree} entries")
            if any(b <= a for a, b in zip(index, index[1:])):
                raise ArityMismatch(f"index {index} is not strictly increasing")
            if any(not 0 <= i < nvars for i in index):
                raise IndexOutOfRange(f"index {index} outside 0..{nvars - 1}")
            value = RatFunc.coerce(c, field, nvars)
            if value:
                clean[index] = value
        self.degree = degree
        self.nvars = nvars
        self.field = field
        self.coeffs: Dict[Index, RatFunc] = clean

    @classmethod
    def _raw(cls, degree: int, nvars: int, field: NumberField, coeffs: Dict[Index, RatFunc]) -> "MeroForm":
        obj = object.__new__(cls)
        obj.degree = degree
        obj.nvars = nvars
        obj.field = field
        obj.coeffs = {k: v for k, v in coeffs.items() if v}
        return obj

    # ---- constructors ----

    @classmethod
    def zero(cls, degree: int, nvars: int, field: NumberField) -> "MeroForm":
        return cls._raw(degree, nvars, field, {})

    @classmethod
    def function(cls, f: Union[RatFunc, Poly]) -> "MeroForm":
        f = f if isinstance(f, RatFunc) else RatFunc.from_poly(f)
        return cls._raw(0, f.nvars, f.field, {(): f})

    @classmethod
    def dx(cls, index: int, nvars: int, field: NumberField) -> "MeroForm":
        if not 0 <= index < nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{nvars - 1}")
        return cls._raw(1, nvars, field, {(index,): RatFunc.one(field, nvars)})

    @classmethod
    def one_form(cls, coefficients: Sequence[Union[RatFunc, Poly]]) -> "MeroForm":
        """The 1-form sum(c_i dx_i) from its n coefficients."""
        first = coefficients[0]
        nvars, field = first.nvars, first.field
        if len(coefficients) != nvars:
            raise ArityMismatch(f"{len(coefficients)} coefficients for {nvars} variables")
        return cls(1, nvars, field, {(i,): c for i, c in enumerate(coefficients)})

    @classmethod
    def volume(cls, nvars: int, field: NumberField) -> "MeroForm":
        return cls._raw(nvars, nvars, field, {tuple(range(nvars)): RatFunc.one(field, nvars)})

    # ---- inspection ----

    def coefficient(self, index: Iterable[int]) -> RatFunc:
        return self.coeffs.get(tuple(index), RatFunc.zero(self.field, self.nvars))

    def components(self) -> List[RatFunc]:
        """Coefficient list of a 1-form, in variable order."""
        if self.degree != 1:
            raise ArityMismatch("components() is defined for 1-forms")
        return [self.coefficient((i,)) for i in range(self.nvars)]

    def function_value(self) -> RatFunc:
        if self.degree != 0:
            raise ArityMismatch("function_value() is defined for 0-forms")
        return self.coefficient(())

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs.values())

    def polynomial_coefficients(self) -> Dict[Index, Poly]:
        if not self.is_polynomial():
            raise NotPolynomial(f"{self} has non-polynomial coefficients")
        return {k: c.num for k, c in self.coeffs.items()}

    def indices(self) -> List[Index]:
        return sorted(self.coeffs)

    # ---- arithmetic ----

    def _check(self, other: "MeroForm") -> None:
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        if other.degree != self.degree:
            raise ArityMismatch(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other: "MeroForm") -> "MeroForm":
        if not isinstance(other, MeroForm):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return MeroForm._raw(self.degree, self.nvars, self.field, out)

    def __neg__(self) -> "MeroForm":
        return MeroForm._raw(self.degree, self.nvars, self.field, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "MeroForm") -> "MeroForm":
        if not isinstance(other, MeroForm):
            return NotImplemented
        return self + (-other)

    def scale(self, f: Coefficient) -> "MeroForm":
        g = RatFunc.coerce(f, self.field, self.nvars)
        if not g:
            return MeroForm.zero(self.degree, self.nvars, self.field)
        return MeroForm._raw(self.degree, self.nvars, self.field, {k: c * g for k, c in self.coeffs.items()})

    def __mul__(self, f: Coefficient) -> "MeroForm":
        if isinstance(f, MeroForm):
            return NotImplemented
        return self.scale(f)

    __rmul__ = __mul__

    def __truediv__(self, f: Coefficient) -> "MeroForm":
        g = RatFunc.coerce(f, self.field, self.nvars)
        return self.scale(g.reciprocal())

    def clear_denominators(self) -> Tuple["MeroForm", Poly]:
        """Return (L * self, L) with L the monic lcm of the coefficient denominators."""
        L = Poly.one(self.field, self.nvars)
        for c in self.coeffs.values():
            if not c.is_polynomial():
                L = poly_lcm(L, c.den)
        return (self if L.is_constant() else self.scale(L)), L

    def coefficient_gcd(self) -> Poly:
        if not self.coeffs:
            raise ZeroForm("gcd of the coefficients of the zero form")
        return poly_gcd_many(list(self.polynomial_coefficients().values()))

    def normalized(self) -> "MeroForm":
        """Scale by a constant so the first coefficient has leading coefficient 1."""
        if not self.coeffs:
            return self
        first = self.coeffs[min(self.coeffs)]
        lc = first.num.leading_coefficient()
        return self if lc.is_one() else self.scale(lc.inverse())

    # ---- comparison / printing ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MeroForm):
            return self.degree == other.degree and self.nvars == other.nvars and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.degree, self.nvars, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if self.degree == 0:
            return str(self.function_value())
        parts: List[Tuple[bool, str]] = []
        for index in self.indices():
            negative, text = _coefficient_string(self.coeffs[index])
            basis = _basis_string(index)
            parts.append((negative, f"{text}*{basis}" if text else basis))
        out: List[str] = []
        for negative, body in parts:
            if not out:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f" - {body}" if negative else f" + {body}")
        return "".join(out) or "0"

    def __repr__(self) -> str:
        return f"MeroForm[{self.degree}]({self})"


class VectorField:
    """Derivation sum(X_i d/dx_i) with RatFunc components."""

    __slots__ = ("nvars", "field", "components")

    def __init__(self, components: Sequence[Coefficient], field: Optional[NumberField] = None):
        if not components:
            raise ArityMismatch("vector field without components")
        if field is None:
            field = next(
                (c.field for c in components if isinstance(c, (Poly, RatFunc, FieldElement))),
                None,
            )
            if field is None:
                field = NumberField.rationals()
        nvars = len(components)
        self.nvars = nvars
        self.field = field
        self.components: Tuple[RatFunc, ...] = tuple(RatFunc.coerce(c, field, nvars) for c in components)

    @classmethod
    def diagonal(cls, eigenvalues: Sequence[FieldElement]) -> "VectorField":
        """sum(a_i x_i d/dx_i)."""
        n = len(eigenvalues)
        field = eigenvalues[0].field
        return cls([Poly.variable(i, field, n) * field(a) for i, a in enumerate(eigenvalues)], field)

    @classmethod
    def radial(cls, field: NumberField, nvars: int) -> "VectorField":
        return cls([Poly.variable(i, field, nvars) for i in range(nvars)], field)

    @classmethod
    def coordinate(cls, index: int, field: NumberField, nvars: int) -> "VectorField":
        if not 0 <= index < nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{nvars - 1}")
        return cls([1 if i == index else 0 for i in range(nvars)], field)

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.components)

    def polynomial_components(self) -> List[Poly]:
        return [c.as_poly() for c in self.components]

    def scale(self, f: Coefficient) -> "VectorField":
        g = RatFunc.coerce(f, self.field, self.nvars)
        return VectorField([c * g for c in self.components], self.field)

    def __add__(self, other: "VectorField") -> "VectorField":
        if not isinstance(other, VectorField):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        return VectorField([a + b for a, b in zip(self.components, other.components)], self.field)

    def __neg__(self) -> "VectorField":
        return VectorField([-c for c in self.components], self.field)

    def __sub__(self, other: "VectorField") -> "VectorField":
        return self + (-other)

    def __call__(self, f: Union[RatFunc, Poly]) -> RatFunc:
        return directional_derivative(self, f)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VectorField) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        return "vf(" + ", ".join(str(c) for c in self.components) + ")"

    def __repr__(self) -> str:
        return f"VectorField({self})"


# ============ Operations ============

def wedge(u: MeroForm, v: MeroForm) -> MeroForm:
    """Graded-antisymmetric product; beyond top degree the zero form is returned."""
    if u.nvars != v.nvars:
        raise ArityMismatch(f"{u.nvars} vs {v.nvars} variables")
    degree = u.degree + v.degree
    out: Dict[Index, RatFunc] = {}
    if degree > u.nvars:
        return MeroForm.zero(degree, u.nvars, u.field)
    for I, f in u.coeffs.items():
        for J, g in v.coeffs.items():
            if set(I) & set(J):
                continue
            term = f * g
            if _sign_of_merge(I, J) < 0:
                term = -term
            K = tuple(sorted(I + J))
            out[K] = out[K] + term if K in out else term
    return MeroForm._raw(degree, u.nvars, u.field, out)


def ext_derivative(u: MeroForm) -> MeroForm:
    """Exterior derivative; coefficients are differentiated with the quotient rule."""
    out: Dict[Index, RatFunc] = {}
    for I, f in u.coeffs.items():
        for j in range(u.nvars):
            if j in I:
                continue
            df = f.partial(j)
            if not df:
                continue
            if sum(1 for i in I if i < j) % 2:
                df = -df
            K = tuple(sorted(I + (j,)))
            out[K] = out[K] + df if K in out else df
    return MeroForm._raw(u.degree + 1, u.nvars, u.field, out)


def interior_product(X: VectorField, u: MeroForm) -> MeroForm:
    if u.degree == 0:
        raise DegreeZero("interior product of a 0-form")
    if X.nvars != u.nvars:
        raise ArityMismatch(f"{X.nvars} vs {u.nvars} variables")
    out: Dict[Index, RatFunc] = {}
    for I, f in u.coeffs.items():
        for s, i in enumerate(I):
            Xi = X.components[i]
            if not Xi:
                continue
            term = Xi * f
            if s % 2:
                term = -term
            K = I[:s] + I[s + 1:]
            out[K] = out[K] + term if K in out else term
    return MeroForm._raw(u.degree - 1, u.nvars, u.field, out)


def differential(f: Union[RatFunc, Poly]) -> MeroForm:
    return ext_derivative(MeroForm.function(f))


def pullback(u: MeroForm, images: Sequence[Union[RatFunc, Poly]]) -> MeroForm:
    """Pull u back along x_i = images[i] (same number of variables)."""
    if len(images) != u.nvars:
        raise ArityMismatch(f"{len(images)} images for {u.nvars} variables")
    assignments = [(i, RatFunc.coerce(img, u.field, u.nvars)) for i, img in enumerate(images)]
    dimages = [differential(img) for _, img in assignments]
    result = MeroForm.zero(u.degree, u.nvars, u.field)
    for I, f in u.coeffs.items():
        term = MeroForm.function(f.substitute(assignments))
        for i in I:
            term = wedge(term, dimages[i])
        result = result + term
    return result


def is_tangent(X: VectorField, w: MeroForm) -> bool:
    return interior_product(X, w).is_zero()


def is_integrable(w: MeroForm) -> bool:
    """Frobenius condition w ∧ dw = 0."""
    return wedge(w, ext_derivative(w)).is_zero()


def remove_codim1(w: MeroForm) -> Tuple[MeroForm, Poly]:
    """Divide a polynomial form by the gcd of its coefficients."""
    if w.is_zero():
        raise ZeroForm("cannot remove the codimension-one part of the zero form")
    g = w.coefficient_gcd()
    if g.is_constant():
        return w, g
    reduced = {k: RatFunc.from_poly(c.exact_quotient(g)) for k, c in w.polynomial_coefficients().items()}
    return MeroForm._raw(w.degree, w.nvars, w.field, reduced), g


def directional_derivative(X: VectorField, f: Union[RatFunc, Poly]) -> RatFunc:
    f = f if isinstance(f, RatFunc) else RatFunc.from_poly(f)
    if X.nvars != f.nvars:
        raise ArityMismatch(f"{X.nvars} vs {f.nvars} variables")
    total = RatFunc.zero(f.field, f.nvars)
    for i, Xi in enumerate(X.components):
        if Xi:
            total = total + Xi * f.partial(i)
    return total


def is_first_integral(X: VectorField, f: Union[RatFunc, Poly]) -> bool:
    """X(f) == 0 for a non-constant f; constants are never reported."""
    if f.is_constant():
        return False
    return directional_derivative(X, f).is_zero()


def potential(w: MeroForm) -> Poly:
    """
    Polynomial h with dh = w, for a closed 1-form with polynomial
    coefficients (radial homotopy, term by term).
    """
    if w.degree != 1:
        raise ArityMismatch("potential() expects a 1-form")
    if not ext_derivative(w).is_zero():
        raise NotClosed(f"{w} is not closed")
    h = Poly.zero(w.field, w.nvars)
    for (i,), c in w.polynomial_coefficients().items():
        for mono, v in c.terms.items():
            lifted = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
            h = h + Poly.monomial(lifted, w.field, v * Fraction(1, sum(mono) + 1))
    return h
