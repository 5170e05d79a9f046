from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from ..classes.Elements import AlgebraElement, GroupElement
from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..enums import Chart, GroupFamily
from ..exceptions import IncompatibleOperandsError, InvalidChartError
from .LieAlgebra import bch_multiply

#  coordinate helpers
#  Heisenberg coordinates are kept label-indexed internally: x[k - 1] is x_k.


def _heisenberg_product(x: Sequence[float], xp: Sequence[float], n: int) -> List[float]:
    out = [a + b for a, b in zip(x, xp)]
    out[2 * n] += 0.5 * sum(x[j] * xp[n + j] - xp[j] * x[n + j] for j in range(n))
    return out


def split_coordinates(g: GroupElement) -> Tuple[float, List[float], List[float]]:
    """Returns ``(z, y, x)`` of a split-exponential element with ``y[k-1] = y_k`` and ``x[k-1] = x_k``."""
    n = g.algebra.n
    coords = [float(c) for c in g.coords]
    z = coords[0]
    y = coords[1 : 2 * n + 2]
    x = coords[2 * n + 2 :][::-1]
    return z, y, x


def from_split_coordinates(algebra: GradedLieAlgebra, z: float, y: Sequence[float], x: Sequence[float]) -> GroupElement:
    return GroupElement(algebra, Chart.SPLIT_EXPONENTIAL, [z] + list(y) + list(x)[::-1])


def heisenberg_coordinates(g: GroupElement) -> List[float]:
    """Label-indexed exponential coordinates ``x_1..x_{2n+1}`` of a Heisenberg element."""
    return [float(c) for c in g.coords][::-1]


def _coad(x: Sequence[float], y: Sequence[float], n: int) -> List[float]:
    # coad(x) y as it enters the split group law; only y_{2n+1} feeds it
    top = y[2 * n]
    out = [0.0] * (2 * n + 1)
    for j in range(n):
        out[j] = top * x[n + j]
        out[n + j] = -top * x[j]
    return out


###################################################################################
#  GROUP LAWS  #


def group_identity(algebra: GradedLieAlgebra, chart: Chart = Chart.EXPONENTIAL) -> GroupElement:
    return GroupElement(algebra, chart, [0.0] * algebra.dim)


def _check_heisenberg(g: GroupElement, h: GroupElement):
    for element in (g, h):
        if element.algebra.family != GroupFamily.HEISENBERG:
            raise IncompatibleOperandsError("the explicit Heisenberg law needs Heisenberg group elements")
        if element.chart != Chart.EXPONENTIAL:
            raise InvalidChartError("the Heisenberg law is stated in exponential coordinates", chart=element.chart)
    if g.algebra.n != h.algebra.n:
        raise IncompatibleOperandsError("elements belong to Heisenberg groups of different dimension")


def heisenberg_multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_heisenberg(g, h)
    n = g.algebra.n
    product = _heisenberg_product(heisenberg_coordinates(g), heisenberg_coordinates(h), n)
    return GroupElement(g.algebra, Chart.EXPONENTIAL, product[::-1])


def heisenberg_inverse(g: GroupElement) -> GroupElement:
    _check_heisenberg(g, g)
    return GroupElement(g.algebra, Chart.EXPONENTIAL, [-float(c) for c in g.coords])


def _check_split(g: GroupElement, h: GroupElement):
    for element in (g, h):
        if element.chart != Chart.SPLIT_EXPONENTIAL:
            raise InvalidChartError("the Dynin-Folland law needs split-exponential coordinates", chart=element.chart)
    if g.algebra.n != h.algebra.n:
        raise IncompatibleOperandsError("elements belong to Dynin-Folland groups of different dimension")


def df_group_multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_split(g, h)
    n = g.algebra.n
    z, y, x = split_coordinates(g)
    zp, yp, xp = split_coordinates(h)
    coad = _coad(x, yp, n)
    z2 = z + zp + sum(a * b for a, b in zip(x, yp))
    y2 = [a + b + 0.5 * c for a, b, c in zip(y, yp, coad)]
    x2 = _heisenberg_product(x, xp, n)
    return from_split_coordinates(g.algebra, z2, y2, x2)


def df_group_inverse(g: GroupElement) -> GroupElement:
    _check_split(g, g)
    n = g.algebra.n
    z, y, x = split_coordinates(g)
    coad = _coad(x, y, n)
    y_inv = [-a + 0.5 * c for a, c in zip(y, coad)]
    z_inv = -z - sum(a * b for a, b in zip(x, y_inv))
    return from_split_coordinates(g.algebra, z_inv, y_inv, [-a for a in x])


def exponential_multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """Exponential-chart product of any algebra of step at most three, through the BCH series."""
    for element in (g, h):
        if element.chart != Chart.EXPONENTIAL:
            raise InvalidChartError("BCH multiplication works in exponential coordinates", chart=element.chart)
    product = bch_multiply(to_algebra(g), to_algebra(h))
    return GroupElement(g.algebra, Chart.EXPONENTIAL, product.coeffs)


def to_algebra(g: GroupElement) -> AlgebraElement:
    if g.chart != Chart.EXPONENTIAL:
        raise InvalidChartError("only exponential coordinates are algebra coordinates", chart=g.chart)
    return AlgebraElement(g.algebra, g.coords)


def to_group(a: AlgebraElement) -> GroupElement:
    return GroupElement(a.algebra, Chart.EXPONENTIAL, a.coeffs)


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.chart != h.chart:
        raise InvalidChartError("cannot multiply elements given in different charts", chart=h.chart)
    if g.chart == Chart.SPLIT_EXPONENTIAL:
        return df_group_multiply(g, h)
    if g.algebra.family == GroupFamily.HEISENBERG:
        return heisenberg_multiply(g, h)
    return exponential_multiply(g, h)


def inverse(g: GroupElement) -> GroupElement:
    if g.chart == Chart.SPLIT_EXPONENTIAL:
        return df_group_inverse(g)
    return GroupElement(g.algebra, g.chart, [-float(c) for c in g.coords])


def random_element(
    algebra: GradedLieAlgebra, rng: np.random.Generator, chart: Chart = Chart.EXPONENTIAL, scale: float = 1.0
) -> GroupElement:
    return GroupElement(algebra, chart, rng.uniform(-scale, scale, algebra.dim))


__all__ = [
    "df_group_inverse",
    "df_group_multiply",
    "exponential_multiply",
    "from_split_coordinates",
    "group_identity",
    "heisenberg_coordinates",
    "heisenberg_inverse",
    "heisenberg_multiply",
    "inverse",
    "multiply",
    "random_element",
    "split_coordinates",
    "to_algebra",
    "to_group",
]
