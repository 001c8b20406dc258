"""
Sparse multivariate polynomials and rational functions over a NumberField.

Monomials are exponent tuples of fixed length n; terms are stored in a
dict keyed by monomial with nonzero FieldElement coefficients. Ordering is
graded lexicographic with x1 > x2 > ... > xn.
"""

from fractions import Fraction
from functools import reduce
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import (
    ArityMismatch,
    CertificateFailure,
    DivisionByZero,
    IndexOutOfRange,
    MixedFields,
    NotPolynomial,
    ZeroPolynomial,
)
from .scalars import FieldElement, NumberField

Monomial = Tuple[int, ...]
Scalar = Union[FieldElement, int, Fraction]


def grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    """Sort key: total degree first, then lexicographic."""
    return (sum(mono), mono)


def variable_names(nvars: int) -> List[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def _format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_term(c: FieldElement, mono_str: str) -> Tuple[bool, str]:
    """Return (negative, body) for one term."""
    if c.is_rational():
        r = c.to_rational()
        a = abs(r)
        if not mono_str:
            return r < 0, str(a)
        if a == 1:
            return r < 0, mono_str
        return r < 0, f"{a}*{mono_str}"
    if not mono_str:
        return False, f"({c})"
    return False, f"({c})*{mono_str}"


def join_signed(parts: Iterable[Tuple[bool, str]]) -> str:
    out: List[str] = []
    for negative, body in parts:
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out) or "0"


class Poly:
    """Sparse polynomial in x1..xn with coefficients in a NumberField."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: NumberField, nvars: int, terms: Optional[Mapping[Monomial, Scalar]] = None):
        if nvars < 1:
            raise ArityMismatch("polynomials need at least one variable")
        clean: Dict[Monomial, FieldElement] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ArityMismatch(f"bad exponent vector {mono} for {nvars} variables")
            value = field(c)
            if value:
                clean[mono] = clean[mono] + value if mono in clean else value
        self.field = field
        self.nvars = nvars
        self.terms: Dict[Monomial, FieldElement] = {m: c for m, c in clean.items() if c}

    @classmethod
    def _raw(cls, field: NumberField, nvars: int, terms: Dict[Monomial, FieldElement]) -> "Poly":
        obj = object.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # ---- constructors ----

    @classmethod
    def zero(cls, field: NumberField, nvars: int) -> "Poly":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, value: Scalar, field: NumberField, nvars: int) -> "Poly":
        c = field(value)
        return cls._raw(field, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, field: NumberField, nvars: int) -> "Poly":
        return cls.constant(1, field, nvars)

    @classmethod
    def variable(cls, index: int, field: NumberField, nvars: int) -> "Poly":
        if not 0 <= index < nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{nvars - 1}")
        mono = tuple(1 if k == index else 0 for k in range(nvars))
        return cls._raw(field, nvars, {mono: field.one()})

    @classmethod
    def monomial(cls, mono: Monomial, field: NumberField, coefficient: Scalar = 1) -> "Poly":
        return cls(field, len(mono), {tuple(mono): coefficient})

    def _like(self, terms: Dict[Monomial, FieldElement]) -> "Poly":
        return Poly._raw(self.field, self.nvars, terms)

    def _one(self) -> "Poly":
        return Poly.one(self.field, self.nvars)

    # ---- inspection ----

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> FieldElement:
        return self.terms.get((0,) * self.nvars, self.field.zero())

    def coefficient(self, mono: Monomial) -> FieldElement:
        return self.terms.get(tuple(mono), self.field.zero())

    def total_degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def order(self) -> int:
        """Smallest total degree among the terms (order of vanishing at 0)."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(sum(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def min_degree_in(self, index: int) -> int:
        return min((m[index] for m in self.terms), default=0)

    def variables(self) -> List[int]:
        return sorted({i for m in self.terms for i, e in enumerate(m) if e})

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("leading monomial of the zero polynomial")
        return max(self.terms, key=grlex_key)

    def leading_coefficient(self) -> FieldElement:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> List[Tuple[Monomial, FieldElement]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficients_in(self, index: int) -> Dict[int, "Poly"]:
        """Group terms by the exponent of x_index; coefficients are free of x_index."""
        groups: Dict[int, Dict[Monomial, FieldElement]] = {}
        for m, c in self.terms.items():
            e = m[index]
            stripped = m[:index] + (0,) + m[index + 1:]
            groups.setdefault(e, {})[stripped] = c
        return {e: self._like(t) for e, t in groups.items()}

    # ---- coercion ----

    def _check(self, other: "Poly") -> None:
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        if other.field is not self.field and other.field != self.field:
            raise MixedFields(f"{self.field!r} and {other.field!r}")

    def _coerce(self, other: object) -> Optional["Poly"]:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (FieldElement, int, Fraction)):
            return Poly.constant(other, self.field, self.nvars)
        return None

    # ---- arithmetic ----

    def __add__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            v = terms[m] + c if m in terms else c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (FieldElement, int, Fraction)):
            return self.scale(self.field(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return self._like({})
        terms: Dict[Monomial, FieldElement] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = terms[m] + c1 * c2 if m in terms else c1 * c2
                terms[m] = v
        return self._like({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise NotPolynomial("negative power of a polynomial")
        result = self._one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: FieldElement) -> "Poly":
        if not c:
            return self._like({})
        return self._like({m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial) -> "Poly":
        return self._like({tuple(a + b for a, b in zip(m, mono)): c for m, c in self.terms.items()})

    def monic(self) -> "Poly":
        """Scale so the grlex leading coefficient is 1; zero stays zero."""
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        return self if lc.is_one() else self.scale(lc.inverse())

    def partial(self, index: int) -> "Poly":
        if not 0 <= index < self.nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{self.nvars - 1}")
        terms: Dict[Monomial, FieldElement] = {}
        for m, c in self.terms.items():
            e = m[index]
            if e:
                terms[m[:index] + (e - 1,) + m[index + 1:]] = c * e
        return self._like(terms)

    def divmod(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        """Multivariate division by a single divisor under grlex."""
        self._check(divisor)
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        lm_q = divisor.leading_monomial()
        inv = divisor.terms[lm_q].inverse()
        quotient: Dict[Monomial, FieldElement] = {}
        remainder: Dict[Monomial, FieldElement] = {}
        work = dict(self.terms)
        while work:
            lm = max(work, key=grlex_key)
            c = work[lm]
            if all(a >= b for a, b in zip(lm, lm_q)):
                shift = tuple(a - b for a, b in zip(lm, lm_q))
                factor = c * inv
                quotient[shift] = factor
                for m, d in divisor.terms.items():
                    m2 = tuple(a + b for a, b in zip(m, shift))
                    v = work[m2] - factor * d if m2 in work else -(factor * d)
                    if v:
                        work[m2] = v
                    else:
                        work.pop(m2, None)
            else:
                remainder[lm] = c
                del work[lm]
        return self._like(quotient), self._like(remainder)

    def try_divide(self, divisor: "Poly") -> Optional["Poly"]:
        """Exact quotient, or None when the division leaves a remainder."""
        q, r = self.divmod(divisor)
        return q if r.is_zero() else None

    def exact_quotient(self, divisor: "Poly") -> "Poly":
        q = self.try_divide(divisor)
        if q is None:
            raise CertificateFailure("inexact polynomial division", f"{self} / {divisor}")
        return q

    # ---- jets ----

    def homogeneous_part(self, degree: int) -> "Poly":
        return self._like({m: c for m, c in self.terms.items() if sum(m) == degree})

    def initial_part(self) -> "Poly":
        """Lowest-degree homogeneous component."""
        if not self.terms:
            raise ZeroPolynomial("initial part of the zero polynomial")
        return self.homogeneous_part(self.order())

    def truncate(self, order: int) -> "Poly":
        """Drop every term of total degree >= order."""
        return self._like({m: c for m, c in self.terms.items() if sum(m) < order})

    def map_coefficients(self, fn: Callable[[FieldElement], FieldElement]) -> "Poly":
        return self._like({m: v for m, c in self.terms.items() if (v := fn(c))})

    # ---- substitution ----

    def substitute(self, assignments: Union[Mapping[int, object], Iterable[Tuple[int, object]]]) -> "RatFunc":
        """
        Simultaneous substitution x_i -> r_i of rational functions.

        Computed over a common denominator prod(den_i^maxdeg_i) and
        normalized once at the end.
        """
        items = assignments.items() if isinstance(assignments, Mapping) else assignments
        images: Dict[int, RatFunc] = {}
        for index, image in items:
            if not 0 <= index < self.nvars:
                raise IndexOutOfRange(f"variable index {index} outside 0..{self.nvars - 1}")
            if index in images:
                raise ArityMismatch(f"variable x{index + 1} assigned twice")
            images[index] = RatFunc.coerce(image, self.field, self.nvars)
        if not images or not self.terms:
            return RatFunc.from_poly(self)
        one = self._one()
        max_exp = {i: self.degree_in(i) for i in images}
        num_pows: Dict[int, List[Poly]] = {i: [one] for i in images}
        den_pows: Dict[int, List[Poly]] = {i: [one] for i in images}

        def power(cache: List[Poly], base: Poly, e: int) -> Poly:
            while len(cache) <= e:
                cache.append(cache[-1] * base)
            return cache[e]

        common_den = one
        for i, img in images.items():
            if not img.den.is_constant():
                common_den = common_den * power(den_pows[i], img.den, max_exp[i])
        total = self._like({})
        for mono, c in self.terms.items():
            kept = tuple(0 if i in images else e for i, e in enumerate(mono))
            term = self._like({kept: c})
            for i, img in images.items():
                e = mono[i]
                if e:
                    term = term * power(num_pows[i], img.num, e)
                if not img.den.is_constant() and max_exp[i] - e:
                    term = term * power(den_pows[i], img.den, max_exp[i] - e)
            total = total + term
        return RatFunc(total, common_den)

    def evaluate_at_origin(self) -> FieldElement:
        return self.constant_term()

    # ---- comparison / printing ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        if isinstance(other, (FieldElement, int, Fraction)):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or variable_names(self.nvars)
        return join_signed(_format_term(c, _format_monomial(m, names)) for m, c in self.sorted_terms())

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({self})"


# ============ GCD ============

def _monomial_gcd(mono_poly: Poly, other: Poly) -> Poly:
    (mono,) = mono_poly.terms
    exps = list(mono)
    for m in other.terms:
        exps = [min(a, b) for a, b in zip(exps, m)]
    return Poly._raw(mono_poly.field, mono_poly.nvars, {tuple(exps): mono_poly.field.one()})


def _content(p: Poly, v: int) -> Poly:
    """Gcd of the coefficients of p viewed as a polynomial in x_v."""
    coeffs = sorted(p.coefficients_in(v).values(), key=lambda c: len(c.terms))
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    return g._one() if g.is_constant() else g.monic()


def _primitive_part(p: Poly, v: int) -> Poly:
    c = _content(p, v)
    return p if c.is_constant() else p.exact_quotient(c)


def _leading_in(p: Poly, v: int) -> Tuple[int, Poly]:
    groups = p.coefficients_in(v)
    d = max(groups)
    return d, groups[d]


def _pseudo_remainder(a: Poly, b: Poly, v: int) -> Poly:
    db, lb = _leading_in(b, v)
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        dr, lr = _leading_in(r, v)
        shift = tuple(dr - db if k == v else 0 for k in range(a.nvars))
        r = r * lb - (lr * b).mul_monomial(shift)
    return r


def _primitive_prs(a: Poly, b: Poly, v: int) -> Poly:
    """Gcd of two polynomials primitive in x_v and of positive degree in x_v."""
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while True:
        r = _pseudo_remainder(a, b, v)
        if r.is_zero():
            return b
        if r.degree_in(v) <= 0:
            return a._one()
        a, b = b, _primitive_part(r, v)


def _gcd(p: Poly, q: Poly) -> Poly:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.is_constant() or q.is_constant():
        return p._one()
    if p.is_monomial():
        return _monomial_gcd(p, q)
    if q.is_monomial():
        return _monomial_gcd(q, p)
    vars_p, vars_q = set(p.variables()), set(q.variables())
    v = max(vars_p | vars_q)
    if v not in vars_p:
        return _gcd(p, _content(q, v))
    if v not in vars_q:
        return _gcd(_content(p, v), q)
    cp, cq = _content(p, v), _content(q, v)
    pp = p if cp.is_constant() else p.exact_quotient(cp)
    pq = q if cq.is_constant() else q.exact_quotient(cq)
    return _gcd(cp, cq) * _primitive_prs(pp, pq, v)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; gcd(p, 0) = p/lc(p)."""
    p._check(q)
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    return _gcd(p, q).monic()


def poly_gcd_many(polys: Sequence[Poly]) -> Poly:
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ZeroPolynomial("gcd of zero polynomials")
    return reduce(poly_gcd, nonzero[1:], nonzero[0].monic())


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("lcm with the zero polynomial")
    return (p * q).exact_quotient(poly_gcd(p, q)).monic()


def divides(d: Poly, p: Poly) -> bool:
    if d.is_zero():
        return p.is_zero()
    return p.try_divide(d) is not None


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    """Dispatch '+', '-', '*' on two compatible polynomials."""
    p._check(q)
    if op == "+":
        return p + q
    if op == "-":
        return p - q
    if op == "*":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def partial_derivative(p: Poly, index: int) -> Poly:
    return p.partial(index)


def substitute(p: Poly, assignments: Union[Mapping[int, object], Iterable[Tuple[int, object]]]) -> "RatFunc":
    return p.substitute(assignments)


def initial_part(p: Poly) -> Poly:
    return p.initial_part()


def truncate(p: Poly, order: int) -> Poly:
    return p.truncate(order)


# ============ Rational functions ============

def _wrap(p: Poly, strict: bool) -> str:
    s = str(p)
    if len(p.terms) > 1 or (strict and ("*" in s or s.startswith("-"))):
        return f"({s})"
    return s


class RatFunc:
    """
    Quotient num/den of polynomials in lowest terms, den with grlex
    leading coefficient 1. Equality is structural on that normal form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None):
        if den is None:
            den = num._one()
        num._check(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, num._one()
            return
        if not den.is_constant():
            g = _gcd(num, den)
            if not g.is_constant():
                num = num.exact_quotient(g)
                den = den.exact_quotient(g)
        lc = den.leading_coefficient()
        if not lc.is_one():
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls._raw(p, p._one())

    @classmethod
    def coerce(cls, value: object, field: NumberField, nvars: int) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.nvars != nvars:
                raise ArityMismatch(f"{value.nvars} vs {nvars} variables")
            if value.field != field:
                raise MixedFields(f"{value.field!r} and {field!r}")
            return value
        if isinstance(value, Poly):
            if value.nvars != nvars:
                raise ArityMismatch(f"{value.nvars} vs {nvars} variables")
            if value.field != field:
                raise MixedFields(f"{value.field!r} and {field!r}")
            return cls.from_poly(value)
        if isinstance(value, (FieldElement, int, Fraction)):
            return cls.from_poly(Poly.constant(value, field, nvars))
        raise TypeError(f"cannot coerce {type(value).__name__} to a rational function")

    @classmethod
    def zero(cls, field: NumberField, nvars: int) -> "RatFunc":
        return cls.from_poly(Poly.zero(field, nvars))

    @classmethod
    def one(cls, field: NumberField, nvars: int) -> "RatFunc":
        return cls.from_poly(Poly.one(field, nvars))

    @property
    def field(self) -> NumberField:
        return self.num.field

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def _coerce(self, other: object) -> Optional["RatFunc"]:
        if isinstance(other, (RatFunc, Poly, FieldElement, int, Fraction)):
            return RatFunc.coerce(other, self.field, self.nvars)
        return None

    # ---- predicates ----

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise NotPolynomial(f"{self} is not a polynomial")
        return self.num

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise NotPolynomial(f"{self} is not constant")
        return self.num.constant_term()

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ---- arithmetic ----

    def __add__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc.from_poly(self.num + o.num)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        g = _gcd(self.den, o.den)
        left = o.den.exact_quotient(g)
        right = self.den.exact_quotient(g)
        return RatFunc(self.num * left + o.num * right, self.den * left)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFunc.zero(self.field, self.nvars)
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc.from_poly(self.num * o.num)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("reciprocal of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RatFunc._raw(self.num ** exponent, self.den ** exponent)

    def partial(self, index: int) -> "RatFunc":
        if self.is_polynomial():
            return RatFunc.from_poly(self.num.partial(index))
        top = self.num.partial(index) * self.den - self.num * self.den.partial(index)
        return RatFunc(top, self.den * self.den)

    def substitute(self, assignments: Union[Mapping[int, object], Iterable[Tuple[int, object]]]) -> "RatFunc":
        items = list(assignments.items() if isinstance(assignments, Mapping) else assignments)
        top = self.num.substitute(items)
        if self.is_polynomial():
            return top * RatFunc.from_poly(self.den)
        return top / self.den.substitute(items)

    # ---- comparison / printing ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.is_polynomial() and self.num == other
        if isinstance(other, (FieldElement, int, Fraction)):
            return self.is_constant() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"{_wrap(self.num, False)}/{_wrap(self.den, True)}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"
