from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from attrs import evolve

from ..classes.DilationFamily import DilationFamily
from ..classes.Estimates import CountEstimate
from ..enums import GroupFamily
from ..exceptions import IncompatibleOperandsError, InvalidParameterError
from .Dilations import anharmonic_h1_weights
from .Orbits import flat_orbit

GENERIC_GROUPS = ("siz-generic", "generic")


def _check_nu(nu) -> int:
    if isinstance(nu, bool) or int(nu) != nu or nu < 1:
        raise InvalidParameterError(f"nu must be a positive integer, got {nu!r}", parameter="nu")
    return int(nu)


def predict_counting(
    group: Union[str, GroupFamily],
    D: Optional[DilationFamily],
    nu: int,
    n: Optional[int] = None,
    Q: Optional[int] = None,
    Q_center: Optional[int] = None,
    d_pi: Optional[float] = None,
) -> CountEstimate:
    """Eigenvalue counting prediction ``N(lam) ~ |rho|^rho_power lam^((Q - Q_center) / nu)``.

    For the Heisenberg and Dynin-Folland families the exponents come from the flat orbit through
    ``rho Z*`` under ``D``; ``siz-generic`` takes ``Q``, ``Q_center`` and the formal dimension of a
    representation square-integrable modulo the centre and predicts ``lam^((Q - Q_center) / nu) / d_pi``.
    """
    nu = _check_nu(nu)
    if isinstance(group, str) and group.strip().lower() in GENERIC_GROUPS:
        if Q is None or Q_center is None or d_pi is None:
            raise InvalidParameterError("siz-generic predictions need Q, Q_center and d_pi", parameter="group")
        if not 0 <= Q_center < Q:
            raise InvalidParameterError(f"need 0 <= Q_center < Q, got {Q_center} and {Q}", parameter="Q_center")
        if not d_pi > 0:
            raise InvalidParameterError(f"the formal dimension must be positive, got {d_pi}", parameter="d_pi")
        return CountEstimate(
            lambda_exponent=Fraction(Q - Q_center, nu),
            rho_power=Fraction(0),
            prefactor=1.0 / d_pi,
            threshold="none",
            source="siz-generic",
        )

    family = GroupFamily.from_name(group) if isinstance(group, str) else GroupFamily(group)
    if family not in (GroupFamily.HEISENBERG, GroupFamily.DYNIN_FOLLAND):
        raise IncompatibleOperandsError(f"no counting prediction for the {family.name} family")
    if D is None:
        raise InvalidParameterError("a dilation family is required", parameter="weights")
    algebra = D.algebra
    if algebra.family != family or (n is not None and algebra.n != n):
        raise IncompatibleOperandsError(f"the dilations live on {algebra!r}, not on {family.name} n={n}")
    orbit = flat_orbit(algebra, 1)
    center_weight = D.weights[orbit.center_index]
    return CountEstimate(
        lambda_exponent=Fraction(D.Q - D.Q_center, nu),
        rho_power=orbit.rho_power,
        prefactor=2.0**orbit.dimension / orbit.unit_pfaffian,
        threshold=f"N = 0 for lam < |rho|^({Fraction(nu, center_weight)})",
        source=f"{family.name.lower()}-orbit",
    )


def predict_eigengrowth(estimate: CountEstimate) -> Tuple[Fraction, Fraction]:
    """``lam_s ~ |rho|^rho_power * s^s_exponent``, the inverse of the counting law."""
    if estimate.lambda_exponent <= 0:
        raise InvalidParameterError("the counting exponent must be positive", parameter="lambda_exponent")
    s_exponent = 1 / Fraction(estimate.lambda_exponent)
    return s_exponent, -Fraction(estimate.rho_power) * s_exponent


def anharmonic_r_exponents(theta1: int, theta2: int) -> CountEstimate:
    """Counting law of ``(-1)^theta2 d^(2 theta2) + (2 pi rho t)^(2 theta1)`` on R.

    The exponent is ``(theta1 + theta2) / (2 theta1 theta2)``.
    """
    D = anharmonic_h1_weights(theta1, theta2)
    common = gcd(theta1, theta2)
    estimate = predict_counting(GroupFamily.HEISENBERG, D, 2 * theta1 * theta2 // common, n=1)
    return evolve(estimate, source="anharmonic-r")


def df_counting_exponent(theta: Sequence[int], nu: int) -> Fraction:
    """``(2n+1)(theta_1 + theta_{n+1} + theta_{2n+1}) / nu`` from the weights of ``X_1..X_{2n}, Y_{2n+1}``."""
    nu = _check_nu(nu)
    if len(theta) % 2 == 0:
        raise InvalidParameterError(f"expected 2n+1 generator weights, got {len(theta)}", parameter="weights")
    n = (len(theta) - 1) // 2
    return Fraction((2 * n + 1) * (theta[0] + theta[n] + theta[2 * n]), nu)


def counting_function(eigenvalues: Sequence[float], lam):
    """``N(lam)``: number of eigenvalues ``<= lam``, counted with multiplicity; vectorized over ``lam``."""
    values = np.sort(np.asarray(eigenvalues, dtype=float))
    counts = np.searchsorted(values, np.asarray(lam, dtype=float), side="right")
    return int(counts) if np.ndim(counts) == 0 else counts


__all__ = [
    "anharmonic_r_exponents",
    "counting_function",
    "df_counting_exponent",
    "predict_counting",
    "predict_eigengrowth",
]
