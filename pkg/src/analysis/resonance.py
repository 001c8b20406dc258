"""
Resonance analysis of eigenvalue tuples.

Strong resonances (integer relations of any sign) are decided exactly
through the relation lattice; nonnegative resonances are searched inside
that lattice within a box [0, bound]^n.
"""

from typing import Iterator, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, field_validator

from ..algebra.linalg import pivot_columns
from ..algebra.scalars import FieldElement, IntegerRelationBasis, NumberField, q_linear_relation_lattice
from ..errors import ArityMismatch, BadDegree, MixedFields
from .charts import BlowupChart, BlowupKind

logger = structlog.get_logger()


class Eigenvalues(BaseModel):
    """Eigenvalue tuple (a_1, ..., a_n) over one number field."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: Tuple[FieldElement, ...]

    @field_validator("values")
    @classmethod
    def _common_field(cls, values: Tuple[FieldElement, ...]) -> Tuple[FieldElement, ...]:
        if len(values) < 2:
            raise ArityMismatch("eigenvalue tuples need at least two entries")
        field = values[0].field
        for v in values[1:]:
            if v.field != field:
                raise MixedFields(f"{field!r} and {v.field!r}")
        return values

    @classmethod
    def of(cls, values: Sequence[object], field: Optional[NumberField] = None) -> "Eigenvalues":
        if field is None:
            field = next((v.field for v in values if isinstance(v, FieldElement)), NumberField.rationals())
        return cls(values=tuple(field(v) for v in values))

    @property
    def field(self) -> NumberField:
        return self.values[0].field

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> FieldElement:
        return self.values[i]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def strong_resonances(a: Eigenvalues) -> IntegerRelationBasis:
    """Integer relations sum(l_i a_i) = 0; empty basis means strongly non-resonant."""
    return q_linear_relation_lattice(list(a.values))


def is_strongly_diagonalizable(a: Eigenvalues) -> bool:
    return strong_resonances(a).rank == 0


def _box_points(basis: IntegerRelationBasis, bound: int) -> Iterator[List[int]]:
    """
    Lattice points with every entry in [0, bound], by triangular
    enumeration of the echelon coefficients.
    """
    rows = [list(r) for r in basis.relations]
    pivots = pivot_columns(rows)
    n = basis.length

    def extend(level: int, partial: List[int]) -> Iterator[List[int]]:
        if level == len(rows):
            if all(0 <= v <= bound for v in partial):
                yield partial
            return
        p = pivots[level]
        h = rows[level][p]
        s = partial[p]
        lo = (-s + h - 1) // h
        hi = (bound - s) // h
        for c in range(lo, hi + 1):
            if c == 0:
                yield from extend(level + 1, partial)
            else:
                yield from extend(level + 1, [u + c * v for u, v in zip(partial, rows[level])])

    yield from extend(0, [0] * n)


def nonneg_resonance_search(a: Eigenvalues, bound: int) -> Optional[Tuple[int, ...]]:
    """
    Smallest nonzero m >= 0 with sum(m_i a_i) = 0 and max(m) <= bound,
    ordered by (max, sum, lexicographic); None when the box holds none.
    """
    if bound < 1:
        raise BadDegree("resonance bound must be at least 1")
    basis = strong_resonances(a)
    if basis.rank == 0:
        return None
    if basis.rank == 1:
        g = basis.relations[0]
        if all(v <= 0 for v in g):
            g = tuple(-v for v in g)
        if all(v >= 0 for v in g) and max(g) <= bound:
            return g
        return None
    best: Optional[Tuple[int, ...]] = None
    best_key = None
    count = 0
    for point in _box_points(basis, bound):
        count += 1
        if not any(point):
            continue
        key = (max(point), sum(point), tuple(point))
        if best_key is None or key < best_key:
            best, best_key = tuple(point), key
    logger.debug("nonneg resonance search", rank=basis.rank, bound=bound, points=count, found=best is not None)
    return best


def blowup_eigenvalue_law(a: Eigenvalues, chart: BlowupChart) -> Eigenvalues:
    """Eigenvalues of the strict transform of diag(a) in the given chart."""
    if len(a) != 3:
        raise ArityMismatch("blow-up eigenvalue law is stated in three variables")
    values = list(a.values)
    c = chart.chart
    if chart.kind == BlowupKind.PUNCTUAL:
        out = [v if j == c else v - values[c] for j, v in enumerate(values)]
    else:
        out = [v - values[c] if j == chart.axis else v for j, v in enumerate(values)]
    return Eigenvalues(values=tuple(out))


def residue_relation_holds(a: Eigenvalues, b: Sequence[FieldElement]) -> bool:
    """sum(a_i b_i) == 0."""
    total = a.field.zero()
    for x, y in zip(a.values, b):
        total = total + x * y
    return total.is_zero()
