"""
Affine charts of punctual and monoidal blow-ups in three variables.

A chart is described by the coordinate `chart` that divides: in the
punctual chart c every x_j (j != c) becomes x_c * x_j*, and in the monoidal
chart (axis=j, chart=k) only x_j becomes x_k * x_j*. The monoidal centre
{x_j = x_k = 0} is the coordinate axis of the remaining variable.
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from ..algebra.polyalg import Poly, RatFunc
from ..algebra.scalars import NumberField
from ..errors import BadChart


class BlowupKind(str, Enum):
    """Blow-up centre type."""
    PUNCTUAL = "punctual"
    MONOIDAL = "monoidal"


class BlowupChart(BaseModel):
    """One affine chart of a blow-up; indices are 0-based."""
    model_config = ConfigDict(frozen=True)

    kind: BlowupKind
    chart: int
    axis: Optional[int] = None
    nvars: int = 3

    @model_validator(mode="after")
    def _check(self) -> "BlowupChart":
        if self.nvars != 3:
            raise BadChart("blow-up charts are defined in three variables")
        if not 0 <= self.chart < self.nvars:
            raise BadChart(f"chart index {self.chart + 1} outside 1..{self.nvars}")
        if self.kind == BlowupKind.PUNCTUAL:
            if self.axis is not None:
                raise BadChart("punctual blow-up takes no axis")
        else:
            if self.axis is None or not 0 <= self.axis < self.nvars:
                raise BadChart("monoidal blow-up needs an axis in 1..3")
            if self.axis == self.chart:
                raise BadChart("monoidal axis and chart must differ")
        return self

    @classmethod
    def punctual(cls, chart: int) -> "BlowupChart":
        return cls(kind=BlowupKind.PUNCTUAL, chart=chart)

    @classmethod
    def monoidal(cls, axis: int, chart: int) -> "BlowupChart":
        return cls(kind=BlowupKind.MONOIDAL, axis=axis, chart=chart)

    @property
    def divided(self) -> List[int]:
        """Coordinates rewritten as x_chart * x_j*."""
        if self.kind == BlowupKind.PUNCTUAL:
            return [j for j in range(self.nvars) if j != self.chart]
        return [self.axis]

    @property
    def center_axis(self) -> Optional[int]:
        """Variable whose coordinate axis is the monoidal centre."""
        if self.kind == BlowupKind.PUNCTUAL:
            return None
        return next(j for j in range(self.nvars) if j not in (self.axis, self.chart))

    @property
    def label(self) -> str:
        if self.kind == BlowupKind.PUNCTUAL:
            return f"punctual chart {self.chart + 1}"
        return f"monoidal axis {self.axis + 1} chart {self.chart + 1}"

    def substitution(self, field: NumberField) -> List[Poly]:
        """Old coordinates as polynomials in the chart coordinates."""
        xc = Poly.variable(self.chart, field, self.nvars)
        images = []
        for j in range(self.nvars):
            xj = Poly.variable(j, field, self.nvars)
            images.append(xc * xj if j in self.divided else xj)
        return images

    def inverse_substitution(self, field: NumberField) -> List[RatFunc]:
        """Chart coordinates as rational functions of the old ones."""
        xc = RatFunc.from_poly(Poly.variable(self.chart, field, self.nvars))
        out = []
        for j in range(self.nvars):
            xj = RatFunc.from_poly(Poly.variable(j, field, self.nvars))
            out.append(xj / xc if j in self.divided else xj)
        return out


def charts_for(kind: BlowupKind, axis: Optional[int] = None, nvars: int = 3) -> List[BlowupChart]:
    """All charts of the given kind; monoidal charts can be narrowed to one axis."""
    if kind == BlowupKind.PUNCTUAL:
        return [BlowupChart.punctual(c) for c in range(nvars)]
    axes = [axis] if axis is not None else list(range(nvars))
    return [BlowupChart.monoidal(j, k) for j in axes for k in range(nvars) if k != j]
