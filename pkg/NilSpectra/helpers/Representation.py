from __future__ import annotations

from functools import lru_cache
from typing import Dict, Optional, Tuple

import numpy as np
import sympy

from ..classes.DiffOperator import DiffOperator
from ..classes.Elements import AlgebraElement, GroupElement
from ..classes.GradedLieAlgebra import GradedLieAlgebra, parse_label
from ..classes.PolyExpFunction import PolyExpFunction, symbols_for
from ..enums import Chart, GroupFamily
from ..exceptions import (
    DegenerateRepresentationError,
    IncompatibleOperandsError,
    InvalidChartError,
    InvalidParameterError,
)
from .GroupLaw import heisenberg_coordinates, multiply, random_element, split_coordinates
from .LieAlgebra import build_algebra
from .Parallel import parallel_map
from .Sampling import function_battery, relative_residual, sample_points

REPRESENTED_FAMILIES = (GroupFamily.DYNIN_FOLLAND, GroupFamily.HEISENBERG)


def exact_rho(rho) -> sympy.Rational:
    value = sympy.nsimplify(rho, rational=True)
    if value == 0:
        raise DegenerateRepresentationError("the representation parameter rho must be non-zero")
    return value


def _check_family(family: GroupFamily) -> GroupFamily:
    family = GroupFamily(family)
    if family not in REPRESENTED_FAMILIES:
        raise IncompatibleOperandsError(f"no representation table for the {family.name} family")
    return family


def representation_nvars(family: GroupFamily, n: int) -> int:
    """Variables of the representation space: ``H_n`` (2n+1) for Dynin-Folland, ``R^n`` for Heisenberg."""
    return 2 * n + 1 if _check_family(family) == GroupFamily.DYNIN_FOLLAND else n


###################################################################################
#  INFINITESIMAL REPRESENTATION  #


@lru_cache(maxsize=1024)
def _dpi_label(label: str, rho: sympy.Rational, n: int, family: GroupFamily) -> DiffOperator:
    letter, k = parse_label(label)
    phase = 2 * sympy.pi * sympy.I * rho
    if family == GroupFamily.DYNIN_FOLLAND:
        nvars = 2 * n + 1
        t = symbols_for(nvars)
        top = 2 * n + 1
        if letter == "Z":
            return DiffOperator.multiplication(nvars, phase)
        if letter == "Y":
            return DiffOperator.multiplication(nvars, phase * t[k - 1])
        if k == top:
            return DiffOperator.derivative(nvars, top - 1)
        if k > n:
            # X_{n+j} -> d_{n+j} + t_j d_{2n+1} / 2
            return DiffOperator.derivative(nvars, k - 1) + DiffOperator.derivative(
                nvars, top - 1, t[k - n - 1] / 2
            )
        return DiffOperator.derivative(nvars, k - 1) + DiffOperator.derivative(nvars, top - 1, -t[n + k - 1] / 2)

    # Schroedinger representation of H_n on R^n
    t = symbols_for(n)
    if k == 2 * n + 1:
        return DiffOperator.multiplication(n, phase)
    if k > n:
        return DiffOperator.multiplication(n, phase * t[k - n - 1])
    return DiffOperator.derivative(n, k - 1)


def dpi_basis(key, rho, n: int, family: GroupFamily = GroupFamily.DYNIN_FOLLAND) -> DiffOperator:
    """Image of a basis vector (label or 0-based position) under the infinitesimal representation."""
    family = _check_family(family)
    algebra = build_algebra(family, n)
    label = algebra.labels[algebra.resolve(key)]
    return _dpi_label(label, exact_rho(rho), n, family)


def dpi_element(a: AlgebraElement, rho) -> DiffOperator:
    algebra = a.algebra
    family = _check_family(algebra.family)
    nvars = representation_nvars(family, algebra.n)
    result = DiffOperator.zero(nvars)
    for position, coefficient in enumerate(a.coeffs):
        if coefficient != 0:
            image = dpi_basis(position, rho, algebra.n, family)
            result = result + image.scale(sympy.nsimplify(coefficient, rational=True))
    return result


###################################################################################
#  GROUP REPRESENTATION  #


def _split_action(g: GroupElement, rho: sympy.Rational, f: PolyExpFunction) -> PolyExpFunction:
    # (pi(z, y, x) f)(t) = exp(2 pi i rho (z + <t, y>)) f(t . x)
    n = g.algebra.n
    z, y, x = split_coordinates(g)
    t = symbols_for(2 * n + 1)
    mapping = {t[k]: t[k] + x[k] for k in range(2 * n)}
    mapping[t[2 * n]] = t[2 * n] + x[2 * n] + sympy.Rational(1, 2) * sum(
        t[j] * x[n + j] - x[j] * t[n + j] for j in range(n)
    )
    phase = 2 * sympy.pi * sympy.I * rho * (z + sum(tk * yk for tk, yk in zip(t, y)))
    return f.substitute(mapping, phase)


def _schroedinger_action(g: GroupElement, rho: sympy.Rational, f: PolyExpFunction) -> PolyExpFunction:
    # (rho(x) f)(t) = exp(2 pi i rho (x_{2n+1} + <a, b>/2 + <b, t>)) f(t + a)
    n = g.algebra.n
    x = heisenberg_coordinates(g)
    a, b = x[:n], x[n : 2 * n]
    t = symbols_for(n)
    mapping = {t[k]: t[k] + a[k] for k in range(n)}
    central = x[2 * n] + 0.5 * sum(p * q for p, q in zip(a, b))
    phase = 2 * sympy.pi * sympy.I * rho * (central + sum(tk * bk for tk, bk in zip(t, b)))
    return f.substitute(mapping, phase)


def rep_action(g: GroupElement, rho, f: PolyExpFunction) -> PolyExpFunction:
    """``pi_rho(g) f``: split coordinates act on ``L^2(H_n)``, Heisenberg exponential coordinates on ``L^2(R^n)``."""
    rho = exact_rho(rho)
    family = g.algebra.family
    if g.chart == Chart.SPLIT_EXPONENTIAL:
        action = _split_action
    elif family == GroupFamily.HEISENBERG:
        action = _schroedinger_action
    else:
        raise InvalidChartError(
            f"{family.name} elements act through split-exponential coordinates only", chart=g.chart
        )
    nvars = representation_nvars(family, g.algebra.n)
    if f.nvars != nvars:
        raise InvalidParameterError(
            f"the representation acts on functions of {nvars} variables, got {f.nvars}", parameter="f"
        )
    return action(g, rho, f)


###################################################################################
#  VERIFICATION  #


def _points_for(nvars: int, points: Optional[np.ndarray]) -> np.ndarray:
    if points is None:
        return sample_points(nvars)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if points.shape[1] != nvars:
        raise InvalidParameterError(f"sample points need {nvars} coordinates", parameter="sample_points")
    return points


def _operator_residual(left: DiffOperator, right: DiffOperator, points: np.ndarray) -> float:
    worst = 0.0
    for f in function_battery(left.nvars):
        worst = max(worst, relative_residual(left.evaluate(f, points), right.evaluate(f, points)))
    return worst


def commutator_residuals(
    rho, n: int, sample_points: Optional[np.ndarray] = None, family: GroupFamily = GroupFamily.DYNIN_FOLLAND
) -> Dict[Tuple[str, str], float]:
    """Residual of ``[dpi(V), dpi(W)] = dpi([V, W])`` on the function battery, per basis pair."""
    family = _check_family(family)
    algebra: GradedLieAlgebra = build_algebra(family, n)
    points = _points_for(representation_nvars(family, n), sample_points)
    images = [dpi_basis(i, rho, n, family) for i in range(algebra.dim)]

    def residual(pair: Tuple[int, int]) -> float:
        i, j = pair
        left = images[i].commutator(images[j])
        terms = {k: c for k, c in algebra.bracket_terms(i, j)}
        right = dpi_element(AlgebraElement.from_terms(algebra, terms), rho)
        return _operator_residual(left, right, points)

    pairs = [(i, j) for i in range(algebra.dim) for j in range(i + 1, algebra.dim)]
    values = parallel_map(residual, pairs)
    return {(algebra.labels[i], algebra.labels[j]): value for (i, j), value in zip(pairs, values)}


def verify_commutators(
    rho, n: int, sample_points: Optional[np.ndarray] = None, family: GroupFamily = GroupFamily.DYNIN_FOLLAND
) -> float:
    return max(commutator_residuals(rho, n, sample_points, family).values())


def homomorphism_residual(g: GroupElement, h: GroupElement, rho, f: PolyExpFunction, points: np.ndarray) -> float:
    left = rep_action(g, rho, rep_action(h, rho, f))
    right = rep_action(multiply(g, h), rho, f)
    return relative_residual(left.evaluate(points), right.evaluate(points))


def verify_homomorphism(
    rho,
    n: int,
    trials: int = 50,
    seed: int = 0,
    family: GroupFamily = GroupFamily.DYNIN_FOLLAND,
    sample_points: Optional[np.ndarray] = None,
) -> float:
    """Max residual of ``pi(g) pi(h) f = pi(gh) f`` over random pairs; trial k draws from ``default_rng([seed, k])``."""
    if trials < 1:
        raise InvalidParameterError("at least one trial is required", parameter="trials")
    family = _check_family(family)
    exact_rho(rho)
    algebra = build_algebra(family, n)
    chart = Chart.SPLIT_EXPONENTIAL if family == GroupFamily.DYNIN_FOLLAND else Chart.EXPONENTIAL
    points = _points_for(representation_nvars(family, n), sample_points)
    battery = function_battery(points.shape[1])

    def trial(index: int) -> float:
        rng = np.random.default_rng([seed, index])
        g = random_element(algebra, rng, chart)
        h = random_element(algebra, rng, chart)
        return homomorphism_residual(g, h, rho, battery[index % len(battery)], points)

    return max(parallel_map(trial, range(trials)))


__all__ = [
    "commutator_residuals",
    "dpi_basis",
    "dpi_element",
    "exact_rho",
    "homomorphism_residual",
    "rep_action",
    "representation_nvars",
    "verify_commutators",
    "verify_homomorphism",
]
