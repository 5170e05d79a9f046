from __future__ import annotations

from fractions import Fraction
from numbers import Number
from typing import Sequence, Tuple

import numpy as np
from attrs import define, field

from ..enums import Chart, GroupFamily
from ..exceptions import IncompatibleOperandsError, InvalidChartError, InvalidParameterError
from .GradedLieAlgebra import GradedLieAlgebra


def _as_coordinates(values) -> Tuple[Number, ...]:
    if isinstance(values, np.ndarray):
        return tuple(values.tolist())
    return tuple(values)


def is_exact(values: Sequence) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)


@define(frozen=True, slots=True)
class AlgebraElement:
    algebra: GradedLieAlgebra = field(eq=False, repr=False)
    coeffs: Tuple[Number, ...] = field(converter=_as_coordinates)

    def __attrs_post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise InvalidParameterError(
                f"expected {self.algebra.dim} coordinates, got {len(self.coeffs)}", parameter="coeffs"
            )

    @classmethod
    def zero(cls, algebra: GradedLieAlgebra, exact: bool = True) -> AlgebraElement:
        return cls(algebra, [Fraction(0) if exact else 0.0] * algebra.dim)

    @classmethod
    def basis(cls, algebra: GradedLieAlgebra, key, scale=1) -> AlgebraElement:
        position = algebra.resolve(key)
        coeffs = [0 * scale] * algebra.dim
        coeffs[position] = scale
        return cls(algebra, coeffs)

    @classmethod
    def from_terms(cls, algebra: GradedLieAlgebra, terms) -> AlgebraElement:
        """Builds an element from ``{label_or_index: coefficient}``."""
        coeffs = [Fraction(0)] * algebra.dim
        for key, value in dict(terms).items():
            coeffs[algebra.resolve(key)] += value
        return cls(algebra, coeffs)

    @property
    def exact(self) -> bool:
        return is_exact(self.coeffs)

    def as_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: AlgebraElement):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise IncompatibleOperandsError("elements belong to different algebras")
        return None

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AlgebraElement(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, scalar) -> AlgebraElement:
        if not isinstance(scalar, Number):
            return NotImplemented
        return AlgebraElement(self.algebra, [scalar * a for a in self.coeffs])

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = [f"{c}*{label}" for c, label in zip(self.coeffs, self.algebra.labels) if c != 0]
        return " + ".join(parts) if parts else "0"


@define(frozen=True, slots=True)
class GroupElement:
    """A group element in coordinates of the first or second kind.

    The split-exponential chart orders coordinates as ``(z, y_1..y_{2n+1}, x_{2n+1}..x_1)``,
    the same positions as the Dynin-Folland basis.
    """

    algebra: GradedLieAlgebra = field(eq=False, repr=False)
    chart: Chart
    coords: Tuple[Number, ...] = field(converter=_as_coordinates)

    def __attrs_post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise InvalidParameterError(
                f"expected {self.algebra.dim} coordinates, got {len(self.coords)}", parameter="coords"
            )
        if self.chart == Chart.SPLIT_EXPONENTIAL and self.algebra.family != GroupFamily.DYNIN_FOLLAND:
            raise InvalidChartError(
                "split-exponential coordinates exist only for the Dynin-Folland family", chart=self.chart
            )

    def as_array(self) -> np.ndarray:
        return np.array([float(c) for c in self.coords])

    def distance(self, other: GroupElement) -> float:
        return float(np.max(np.abs(self.as_array() - other.as_array())))


__all__ = ["AlgebraElement", "GroupElement", "is_exact"]
