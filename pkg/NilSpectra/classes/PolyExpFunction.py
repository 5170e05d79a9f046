from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import numpy as np
import sympy
from attrs import define, field

from ..exceptions import InvalidParameterError, VariableMismatchError


@lru_cache(maxsize=None)
def symbols_for(nvars: int) -> Tuple[sympy.Symbol, ...]:
    """The variables ``t_1..t_nvars``."""
    if nvars < 1:
        raise InvalidParameterError("an operator or function needs at least one variable", parameter="nvars")
    return tuple(sympy.Symbol(f"t{k}", real=True) for k in range(1, nvars + 1))


def to_expr(value) -> sympy.Expr:
    return sympy.expand(sympy.sympify(value))


def evaluate_polynomial(expr: sympy.Expr, variables: Tuple[sympy.Symbol, ...], points: np.ndarray) -> np.ndarray:
    """Evaluates a polynomial with numeric (possibly symbolic-constant) coefficients at ``(m, d)`` points."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    values = np.zeros(points.shape[0], dtype=complex)
    if expr == 0:
        return values
    poly = sympy.Poly(expr, *variables)
    for monomial, coefficient in poly.terms():
        term = complex(sympy.N(coefficient))
        powers = np.asarray(monomial, dtype=float)
        values += term * np.prod(np.power(points, powers), axis=1)
    return values


@define(frozen=True, slots=True, eq=False)
class PolyExpFunction:
    """``f(t) = P(t) * exp(E(t))`` with P a polynomial and E of total degree at most two.

    The real part of the quadratic part of E is negative definite, so f is a Schwartz function.
    """

    nvars: int
    poly: sympy.Expr = field(converter=to_expr)
    exponent: sympy.Expr = field(converter=to_expr)

    def __attrs_post_init__(self):
        variables = set(self.variables)
        for part in (self.poly, self.exponent):
            extra = part.free_symbols - variables
            if extra:
                raise VariableMismatchError(f"unexpected symbols {sorted(map(str, extra))} in a function of t")
        if sympy.Poly(self.exponent, *self.variables).total_degree() > 2:
            raise InvalidParameterError("the exponent must have total degree at most two", parameter="exponent")
        hessian = sympy.hessian(self.exponent, self.variables)
        real_part = np.array([[complex(sympy.N(entry)).real for entry in row] for row in hessian.tolist()])
        if np.any(np.linalg.eigvalsh(real_part) >= 0):
            raise InvalidParameterError(
                "the real quadratic part of the exponent must be negative definite", parameter="exponent"
            )

    @property
    def variables(self) -> Tuple[sympy.Symbol, ...]:
        return symbols_for(self.nvars)

    @property
    def expression(self) -> sympy.Expr:
        return self.poly * sympy.exp(self.exponent)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.shape[1] != self.nvars:
            raise VariableMismatchError(f"points have {points.shape[1]} coordinates, expected {self.nvars}")
        amplitude = evaluate_polynomial(self.poly, self.variables, points)
        phase = evaluate_polynomial(self.exponent, self.variables, points)
        return amplitude * np.exp(phase)

    __call__ = evaluate

    def with_poly(self, poly) -> PolyExpFunction:
        return PolyExpFunction(self.nvars, poly, self.exponent)

    def scale(self, factor) -> PolyExpFunction:
        return self.with_poly(sympy.sympify(factor) * self.poly)

    def substitute(self, mapping, extra_exponent=0) -> PolyExpFunction:
        """Simultaneous substitution ``t_k -> mapping[t_k]`` (affine maps keep the class)."""
        poly = self.poly.subs(mapping, simultaneous=True)
        exponent = self.exponent.subs(mapping, simultaneous=True) + extra_exponent
        return PolyExpFunction(self.nvars, poly, exponent)

    def equals(self, other: PolyExpFunction) -> bool:
        """Exact equality of the representation (same exponent, same polynomial)."""
        if other.nvars != self.nvars:
            return False
        return sympy.expand(self.exponent - other.exponent) == 0 and sympy.expand(self.poly - other.poly) == 0

    def __repr__(self) -> str:
        return f"PolyExpFunction(({self.poly}) * exp({self.exponent}))"


__all__ = ["PolyExpFunction", "evaluate_polynomial", "symbols_for", "to_expr"]
