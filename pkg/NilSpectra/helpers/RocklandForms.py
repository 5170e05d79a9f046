from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

import sympy
from attrs import evolve

from .. import config
from ..classes.DiffOperator import DiffOperator
from ..classes.DilationFamily import DilationFamily
from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..classes.RocklandForm import RocklandForm, RocklandTerm
from ..enums import GroupFamily, RocklandStatus
from ..exceptions import (
    IncompatibleOperandsError,
    InvalidParameterError,
    NotHomogeneousError,
    UnvalidatedFormError,
)
from .Dilations import anharmonic_h1_weights, canonical_dilations, df_weights
from .LieAlgebra import build_dynin_folland, is_stratified
from .Representation import dpi_basis, representation_nvars

###################################################################################
#  VALIDATION  #


def is_classical(form: RocklandForm, D: DilationFamily) -> bool:
    """Sign pattern ``(-1)^(nu0 / theta)`` over all basis vectors, or over the first stratum
    of a stratified algebra, each basis vector used once."""
    indices = form.basis_indices
    if len(set(indices)) != len(indices):
        return False
    if any(term.sign != (-1) ** (term.power // 2) for term in form.terms):
        return False
    algebra = form.algebra
    if set(indices) == set(range(algebra.dim)):
        return True
    return is_stratified(algebra) and set(indices) == set(algebra.indices_of_stratum(1))


def validate_rockland_classical(form: RocklandForm, D: Optional[DilationFamily] = None) -> RocklandForm:
    """Checks homogeneity under ``D`` (canonical dilations by default) and classifies the form.

    Returns a copy carrying ``nu``, ``nu0``, the dilations and either ``VERIFIED_CLASSICAL`` or
    ``HOMOGENEOUS_UNVERIFIED``. Terms of different homogeneous degree raise ``NotHomogeneousError``.
    """
    if D is None:
        D = canonical_dilations(form.algebra)
    D.check_algebra(form.algebra)
    first = form.terms[0]
    nu = first.degree(D)
    for term in form.terms[1:]:
        if term.degree(D) != nu:
            raise NotHomogeneousError(
                f"{first.describe(form.algebra)} has degree {nu} but {term.describe(form.algebra)} "
                f"has degree {term.degree(D)}",
                terms=(first.describe(form.algebra), term.describe(form.algebra)),
            )
    status = RocklandStatus.VERIFIED_CLASSICAL if is_classical(form, D) else RocklandStatus.HOMOGENEOUS_UNVERIFIED
    return evolve(form, nu=nu, nu0=nu // 2, status=status, dilations=D)


###################################################################################
#  ASSEMBLY  #


def _exact_coefficient(value) -> sympy.Expr:
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        return sympy.Rational(value.numerator, value.denominator)
    if float(value).is_integer():
        return sympy.Integer(int(value))
    return sympy.Float(float(value))


def assemble_operator(form: RocklandForm, rho, n: Optional[int] = None) -> DiffOperator:
    """The operator ``dpi_rho(P)`` of a validated form, expanded and canonicalized."""
    if not form.validated:
        raise UnvalidatedFormError("validate the form before assembling its operator")
    algebra = form.algebra
    if algebra.family not in (GroupFamily.DYNIN_FOLLAND, GroupFamily.HEISENBERG):
        raise IncompatibleOperandsError(f"no representation table for the {algebra.family.name} family")
    if n is not None and n != algebra.n:
        raise IncompatibleOperandsError(f"the form lives on n={algebra.n}, not n={n}")
    if form.max_power > config.ASSEMBLY_POWER_LIMIT:
        raise InvalidParameterError(
            f"power {form.max_power} exceeds the assembly limit {config.ASSEMBLY_POWER_LIMIT}", parameter="power"
        )
    operator = DiffOperator.zero(representation_nvars(algebra.family, algebra.n))
    for term in form.terms:
        image = dpi_basis(term.index, rho, algebra.n, algebra.family) ** term.power
        operator = operator + image.scale(term.sign * _exact_coefficient(term.coefficient))
    return operator


###################################################################################
#  FORM BUILDERS  #


def sub_laplacian_form(algebra: GradedLieAlgebra, D: Optional[DilationFamily] = None) -> RocklandForm:
    """``-(sum of squares of the first stratum)``."""
    terms = [(1, -1, i, 2) for i in algebra.indices_of_stratum(1)]
    return validate_rockland_classical(RocklandForm.from_terms(algebra, terms), D)


def classical_form(
    algebra: GradedLieAlgebra,
    D: DilationFamily,
    nu0: int,
    coefficients: Optional[Sequence[float]] = None,
    basis: str = "all",
) -> RocklandForm:
    """``sum_j (-1)^(nu0/theta_j) c_j X_j^(2 nu0/theta_j)`` over all basis vectors or the first stratum."""
    if basis == "all":
        indices = list(range(algebra.dim))
    elif basis == "first":
        indices = list(algebra.indices_of_stratum(1))
    else:
        raise InvalidParameterError(f"basis must be 'all' or 'first', got {basis!r}", parameter="basis")
    if coefficients is None:
        coefficients = [1] * len(indices)
    if len(coefficients) != len(indices):
        raise InvalidParameterError(f"expected {len(indices)} coefficients", parameter="coefficients")
    terms = []
    for index, coefficient in zip(indices, coefficients):
        weight = D.weights[index]
        if nu0 % weight:
            raise InvalidParameterError(
                f"nu0={nu0} is not a multiple of the weight {weight} of {algebra.labels[index]}", parameter="nu0"
            )
        terms.append(RocklandTerm(coefficient, (-1) ** (nu0 // weight), index, 2 * nu0 // weight))
    return validate_rockland_classical(RocklandForm(algebra, terms), D)


def df_lcm_form(n: int, theta: Sequence[int] = (5, 4, 3), multiple: int = 13) -> RocklandForm:
    """Classical form over the whole Dynin-Folland basis with ``nu0 = multiple * lcm(weights)``.

    The coefficients are the transcendental constants ``e^pi, pi^e, pi^pi, e^e, e/pi, pi/e,
    e^e/pi^pi`` on ``X_j, X_{n+j}, Y_{2n+1}, X_{2n+1}, Y_j, Y_{n+j}, Z``.
    """
    D = df_weights(n, theta)
    algebra = D.algebra
    nu0 = multiple * reduce(math.lcm, D.weights)
    e, pi = math.e, math.pi
    top = 2 * n + 1
    constants = {"Z": e**e / pi**pi, f"Y_{top}": pi**pi, f"X_{top}": e**e}
    for j in range(1, n + 1):
        constants[f"X_{j}"] = e**pi
        constants[f"X_{n + j}"] = pi**e
        constants[f"Y_{j}"] = e / pi
        constants[f"Y_{n + j}"] = pi / e
    return classical_form(algebra, D, nu0, [constants[label] for label in algebra.labels])


def modified_df_family_form(n: int, k: int) -> RocklandForm:
    """``sum_j (-1)^k (X_j^2k + X_{n+j}^2k) - Y_{2n+1}^2`` under the weights ``1, ..., 1, k``."""
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}", parameter="k")
    D = df_weights(n, [1] * (2 * n) + [k])
    sign = (-1) ** k
    terms = [(1, sign, f"X_{j}", 2 * k) for j in range(1, 2 * n + 1)]
    terms.append((1, -1, f"Y_{2 * n + 1}", 2))
    return validate_rockland_classical(RocklandForm.from_terms(D.algebra, terms), D)


def anharmonic_r_form(theta1: int, theta2: int) -> RocklandForm:
    """``(-1)^theta2 X_1^(2 theta2) + (-1)^theta1 X_2^(2 theta1)`` on H_1, whose image is the
    anharmonic oscillator ``(-1)^theta2 d^(2 theta2) + (2 pi rho t)^(2 theta1)`` on R."""
    D = anharmonic_h1_weights(theta1, theta2)
    terms = [(1, (-1) ** theta2, "X_1", 2 * theta2), (1, (-1) ** theta1, "X_2", 2 * theta1)]
    return validate_rockland_classical(RocklandForm.from_terms(D.algebra, terms), D)


def df_rejected_form(n: int, k: int, sign: int = 1) -> RocklandForm:
    """The unvalidated form ``-sum_j (X_j^2 + X_{n+j}^2) + sign * Y_{2n+1}^2k``."""
    algebra = build_dynin_folland(n)
    terms = [(1, -1, f"X_{j}", 2) for j in range(1, 2 * n + 1)]
    terms.append((1, sign, f"Y_{2 * n + 1}", 2 * k))
    return RocklandForm.from_terms(algebra, terms)


__all__ = [
    "anharmonic_r_form",
    "assemble_operator",
    "classical_form",
    "df_lcm_form",
    "df_rejected_form",
    "is_classical",
    "modified_df_family_form",
    "sub_laplacian_form",
    "validate_rockland_classical",
]
