from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

from attrs import evolve

from ..classes.Estimates import MultiplierQuery
from ..exceptions import ExponentRangeError, InvalidParameterError

ENGEL_HOMOGENEOUS_DIMENSION = 7

Number = Union[int, float, str, Fraction]


def as_fraction(value: Number) -> Fraction:
    """Exact rational from an int, a decimal string or a float (nearest small-denominator fraction)."""
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    return Fraction(value).limit_denominator(10**6)


def _positive_int(value, name: str) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}", parameter=name)
    return int(value)


def make_query(p: Number, q: Number, Q: int, nu: int) -> MultiplierQuery:
    return MultiplierQuery(p=as_fraction(p), q=as_fraction(q), Q=_positive_int(Q, "Q"), nu=_positive_int(nu, "nu"))


def multiplier_bounds(query: MultiplierQuery) -> MultiplierQuery:
    """Fill in the exponents of the heat and Bessel multipliers of a positive Rockland operator.

    With ``alpha = Q / nu`` and ``gap = 1/p - 1/q``:

    - ``||exp(-tR)||_{L^p -> L^q} <= C t^heat_exponent`` with ``heat_exponent = -alpha * gap``,
    - ``(I + R)^(-gamma / nu)`` is ``L^p -> L^q`` bounded for ``gamma >= gamma_threshold = alpha * gap``,
    - Sobolev embeddings ``L^p_{s1} -> L^q_{s2}`` hold for ``s1 - s2 = sobolev_gap``.

    ``classical_sobolev_gap = Q * gap`` is the value under the ``(I + R)^(s / nu)`` normalization.
    """
    p, q = Fraction(query.p), Fraction(query.q)
    if not (1 < p <= 2 <= q):
        raise ExponentRangeError(f"multiplier bounds need 1 < p <= 2 <= q < oo, got p={p}, q={q}")
    Q = _positive_int(query.Q, "Q")
    nu = _positive_int(query.nu, "nu")
    alpha = Fraction(Q, nu)
    gap = 1 / p - 1 / q
    return evolve(
        query,
        p=p,
        q=q,
        alpha=alpha,
        heat_exponent=-alpha * gap,
        gamma_threshold=alpha * gap,
        sobolev_gap=alpha * gap,
        classical_sobolev_gap=Q * gap,
    )


def engel_sublaplacian_query(p: Number, q: Number) -> MultiplierQuery:
    """Sub-Laplacian of the Engel group: homogeneous dimension 7, order 2."""
    return multiplier_bounds(make_query(p, q, ENGEL_HOMOGENEOUS_DIMENSION, 2))


__all__ = ["as_fraction", "engel_sublaplacian_query", "make_query", "multiplier_bounds"]
