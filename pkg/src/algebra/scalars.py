"""
Exact arithmetic in a declared algebraic number field K = Q[t]/(m(t)).

Elements are stored in the power basis 1, t, ..., t^(deg-1) with
arbitrary-precision rational coordinates; every product is reduced
modulo the minimal polynomial.
"""

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import ArityMismatch, DivisionByZero, InvalidField, MixedFields, ZeroDivisor
from .linalg import hermite_normal_form, integer_kernel

Rational = Union[int, Fraction]


# ============ Dense univariate helpers over Q (constant term first) ============

def _trim(coeffs: List[Fraction]) -> List[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _uadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _usub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    return _uadd(a, [-c for c in b])


def _umul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _udivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    rem = _trim(list(a))
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    lead = b[-1]
    while rem and len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        _trim(rem)
    return _trim(quot), rem


def _uderivative(a: Sequence[Fraction]) -> List[Fraction]:
    return _trim([i * a[i] for i in range(1, len(a))])


def _ugcdex(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction], List[Fraction]]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _usub(s0, _umul(q, s1))
        t0, t1 = t1, _usub(t0, _umul(q, t1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


# ============ Fields ============

class NumberField:
    """
    Algebraic number field K = Q[t]/(m(t)).

    The minimal polynomial is given densely, constant term first. It is
    made monic on construction and must be squarefree; irreducibility is
    not checked, so a reducible m surfaces later as ZeroDivisor from
    inversion.
    """

    __slots__ = ("minpoly", "degree", "generator")

    def __init__(self, minpoly: Sequence[Rational], generator: str = "t"):
        coeffs = _trim([Fraction(c) for c in minpoly])
        if len(coeffs) < 2:
            raise InvalidField("minimal polynomial must have degree at least 1")
        lead = coeffs[-1]
        coeffs = [c / lead for c in coeffs]
        g, _, _ = _ugcdex(coeffs, _uderivative(coeffs))
        if len(g) > 1:
            raise InvalidField(f"minimal polynomial {_format_upoly(coeffs, generator)} is not squarefree")
        self.minpoly: Tuple[Fraction, ...] = tuple(coeffs)
        self.degree: int = len(coeffs) - 1
        self.generator = generator

    @classmethod
    def rationals(cls, generator: str = "t") -> "NumberField":
        """K = Q, presented as Q[t]/(t)."""
        return cls([0, 1], generator)

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def _reduce(self, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        rem = list(coeffs)
        m = self.minpoly
        d = self.degree
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            shift = top - d
            for i in range(d + 1):
                rem[shift + i] -= c * m[i]
        rem = rem[:d]
        rem.extend([Fraction(0)] * (d - len(rem)))
        return tuple(rem)

    def element(self, coords: Sequence[Rational]) -> "FieldElement":
        """Element from power-basis coordinates; longer lists are reduced."""
        return FieldElement._make(self, self._reduce([Fraction(c) for c in coords]))

    def __call__(self, value: Union["FieldElement", Rational]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"element of {value.field!r} used in {self!r}")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_rational(self, value: Rational) -> "FieldElement":
        if self.degree == 1:
            return FieldElement._make(self, (Fraction(value),))
        return FieldElement._make(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def gen(self) -> "FieldElement":
        """The class of t."""
        return self.element([0, 1])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        return f"NumberField({_format_upoly(self.minpoly, self.generator)})"


def _format_upoly(coeffs: Sequence[Fraction], name: str) -> str:
    parts: List[str] = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        a = abs(c)
        if mono == "":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) or "0"


# ============ Elements ============

class FieldElement:
    """Element of a NumberField; immutable value type."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Sequence[Rational]):
        if len(coords) != field.degree:
            raise ArityMismatch(f"expected {field.degree} coordinates, got {len(coords)}")
        self.field = field
        self.coords: Tuple[Fraction, ...] = tuple(Fraction(c) for c in coords)

    @classmethod
    def _make(cls, field: NumberField, coords: Tuple[Fraction, ...]) -> "FieldElement":
        obj = object.__new__(cls)
        obj.field = field
        obj.coords = coords
        return obj

    def _coerce(self, other: object) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFields(f"{self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # ---- predicates ----

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_one(self) -> bool:
        return self.coords[0] == 1 and not any(self.coords[1:])

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ---- arithmetic ----

    def __add__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._make(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement._make(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._make(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.degree == 1:
            return FieldElement._make(self.field, (self.coords[0] * o.coords[0],))
        if o.is_rational():
            c = o.coords[0]
            return FieldElement._make(self.field, tuple(a * c for a in self.coords))
        if self.is_rational():
            c = self.coords[0]
            return FieldElement._make(self.field, tuple(c * b for b in o.coords))
        return FieldElement._make(self.field, self.field._reduce(_umul(self.coords, o.coords)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        g, s, _ = _ugcdex(list(self.coords), list(self.field.minpoly))
        if len(g) > 1:
            raise ZeroDivisor(
                f"{self} shares the factor {_format_upoly(g, self.field.generator)} "
                f"with the minimal polynomial"
            )
        return FieldElement._make(self.field, self.field._reduce(s))

    def __truediv__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---- comparison ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.minpoly, self.coords))

    def __str__(self) -> str:
        return _format_upoly(self.coords, self.field.generator)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


# ============ Operations ============

def fe_add(x: FieldElement, y: FieldElement) -> FieldElement:
    """Sum of two elements of the same field."""
    return x + y


def fe_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    """Product reduced modulo the minimal polynomial."""
    return x * y


def fe_inverse(x: FieldElement) -> FieldElement:
    """Inverse via the extended Euclidean algorithm on (x(t), m(t))."""
    return x.inverse()


class IntegerRelationBasis(BaseModel):
    """
    Primitive basis of an integer relation lattice, rows in Hermite
    normal form (positive pivots, entries above pivots reduced).
    """
    model_config = ConfigDict(frozen=True)

    relations: List[Tuple[int, ...]] = Field(default_factory=list)
    length: int
    rank: int = 0

    @model_validator(mode="after")
    def _check_rank(self) -> "IntegerRelationBasis":
        if self.rank != len(self.relations):
            raise ValueError("rank must equal the number of relations")
        if any(len(r) != self.length for r in self.relations):
            raise ValueError("relation length mismatch")
        return self

    def contains(self, vector: Sequence[int]) -> bool:
        """Lattice membership, by reduction against the echelon rows."""
        if len(vector) != self.length:
            return False
        v = list(vector)
        for row in self.relations:
            p = next(i for i, c in enumerate(row) if c != 0)
            q, r = divmod(v[p], row[p])
            if r:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)


def q_linear_relation_lattice(elems: Sequence[FieldElement]) -> IntegerRelationBasis:
    """
    Lattice of integer vectors l with sum(l_i * elems_i) = 0.

    The kernel of the (degree x n) rational coordinate matrix is computed
    over Z by unimodular column operations, which yields a saturated basis
    directly; it is then put in Hermite normal form.
    """
    if not elems:
        raise ArityMismatch("relation lattice of an empty list")
    field = elems[0].field
    for e in elems[1:]:
        if e.field != field:
            raise MixedFields(f"{field!r} and {e.field!r}")
    n = len(elems)
    rows: List[List[int]] = []
    for k in range(field.degree):
        row = [e.coords[k] for e in elems]
        if not any(row):
            continue
        scale = lcm(*(c.denominator for c in row))
        rows.append([int(c * scale) for c in row])
    kernel = integer_kernel(rows, n)
    basis = hermite_normal_form(kernel)
    return IntegerRelationBasis(relations=[tuple(r) for r in basis], length=n, rank=len(basis))
