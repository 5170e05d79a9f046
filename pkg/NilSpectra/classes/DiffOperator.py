from __future__ import annotations

import itertools
from math import comb
from typing import Dict, Iterable, Tuple

import numpy as np
import sympy
from attrs import define, field

from ..exceptions import InvalidParameterError, VariableMismatchError
from .PolyExpFunction import PolyExpFunction, symbols_for, to_expr

MultiIndex = Tuple[int, ...]


def _diff(expr: sympy.Expr, variables, index: MultiIndex) -> sympy.Expr:
    orders = [(v, k) for v, k in zip(variables, index) if k]
    if not orders:
        return expr
    return sympy.diff(expr, *itertools.chain.from_iterable(orders))


@define(frozen=True, slots=True, eq=False)
class DiffOperator:
    """``sum_alpha a_alpha(t) d^alpha`` with polynomial coefficients, kept in canonical form
    (one expanded, nonzero coefficient per derivative multi-index)."""

    nvars: int
    terms: Dict[MultiIndex, sympy.Expr] = field(factory=dict, repr=False)

    def __attrs_post_init__(self):
        variables = set(symbols_for(self.nvars))
        canonical: Dict[MultiIndex, sympy.Expr] = {}
        for index, coefficient in self.terms.items():
            index = tuple(int(k) for k in index)
            if len(index) != self.nvars or any(k < 0 for k in index):
                raise InvalidParameterError(f"invalid derivative multi-index {index}", parameter="terms")
            canonical[index] = canonical.get(index, 0) + to_expr(coefficient)
        for index in list(canonical):
            coefficient = sympy.expand(canonical[index])
            extra = coefficient.free_symbols - variables
            if extra:
                raise VariableMismatchError(f"unexpected symbols {sorted(map(str, extra))} in an operator")
            if coefficient == 0:
                del canonical[index]
            else:
                canonical[index] = coefficient
        object.__setattr__(self, "terms", dict(sorted(canonical.items())))

    ###################################################################################
    #  CONSTRUCTORS  #

    @classmethod
    def zero(cls, nvars: int) -> DiffOperator:
        return cls(nvars, {})

    @classmethod
    def identity(cls, nvars: int) -> DiffOperator:
        return cls.multiplication(nvars, 1)

    @classmethod
    def multiplication(cls, nvars: int, coefficient) -> DiffOperator:
        return cls(nvars, {(0,) * nvars: coefficient})

    @classmethod
    def derivative(cls, nvars: int, index: int, coefficient=1) -> DiffOperator:
        """``coefficient * d/dt_{index+1}`` (``index`` is 0-based)."""
        if not 0 <= index < nvars:
            raise InvalidParameterError(f"variable index {index} out of range", parameter="index")
        multi = [0] * nvars
        multi[index] = 1
        return cls(nvars, {tuple(multi): coefficient})

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[Tuple[object, MultiIndex]]) -> DiffOperator:
        merged: Dict[MultiIndex, sympy.Expr] = {}
        for coefficient, index in terms:
            merged[tuple(index)] = merged.get(tuple(index), 0) + to_expr(coefficient)
        return cls(nvars, merged)

    @property
    def variables(self) -> Tuple[sympy.Symbol, ...]:
        return symbols_for(self.nvars)

    ###################################################################################
    #  ALGEBRA  #

    def _check(self, other: DiffOperator):
        if other.nvars != self.nvars:
            raise VariableMismatchError(f"operators act on {self.nvars} and {other.nvars} variables")

    def __add__(self, other: DiffOperator) -> DiffOperator:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for index, coefficient in other.terms.items():
            merged[index] = merged.get(index, 0) + coefficient
        return DiffOperator(self.nvars, merged)

    def __neg__(self) -> DiffOperator:
        return DiffOperator(self.nvars, {index: -c for index, c in self.terms.items()})

    def __sub__(self, other: DiffOperator) -> DiffOperator:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> DiffOperator:
        factor = sympy.sympify(factor)
        return DiffOperator(self.nvars, {index: factor * c for index, c in self.terms.items()})

    def compose(self, other: DiffOperator) -> DiffOperator:
        """``self o other`` via the Leibniz rule."""
        self._check(other)
        variables = self.variables
        result: Dict[MultiIndex, sympy.Expr] = {}
        for alpha, a in self.terms.items():
            for beta, b in other.terms.items():
                for gamma in itertools.product(*(range(k + 1) for k in alpha)):
                    db = _diff(b, variables, gamma)
                    if db == 0:
                        continue
                    factor = 1
                    for alpha_i, gamma_i in zip(alpha, gamma):
                        factor *= comb(alpha_i, gamma_i)
                    index = tuple(a_i - g_i + b_i for a_i, g_i, b_i in zip(alpha, gamma, beta))
                    result[index] = result.get(index, 0) + factor * a * db
        return DiffOperator(self.nvars, result)

    def __mul__(self, other):
        if isinstance(other, DiffOperator):
            return self.compose(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> DiffOperator:
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidParameterError("operator powers must be non-negative integers", parameter="power")
        result = DiffOperator.identity(self.nvars)
        for _ in range(exponent):
            result = self.compose(result)
        return result

    def commutator(self, other: DiffOperator) -> DiffOperator:
        return self.compose(other) - other.compose(self)

    ###################################################################################
    #  ACTION  #

    def apply(self, f: PolyExpFunction) -> PolyExpFunction:
        """Exact image ``self(f)``; the exponent of f is kept and only the polynomial part changes."""
        if f.nvars != self.nvars:
            raise VariableMismatchError(f"operator on {self.nvars} variables applied to a function of {f.nvars}")
        variables = self.variables
        gradient = [sympy.diff(f.exponent, v) for v in variables]
        cache: Dict[MultiIndex, sympy.Expr] = {(0,) * self.nvars: f.poly}

        def derivative_poly(index: MultiIndex) -> sympy.Expr:
            # d^index (P e^E) = Q_index e^E, built one derivative at a time
            if index in cache:
                return cache[index]
            position = next(i for i, k in enumerate(index) if k)
            lower = list(index)
            lower[position] -= 1
            q = derivative_poly(tuple(lower))
            value = sympy.expand(sympy.diff(q, variables[position]) + q * gradient[position])
            cache[index] = value
            return value

        poly = sympy.Integer(0)
        for index, coefficient in self.terms.items():
            poly += coefficient * derivative_poly(index)
        return f.with_poly(sympy.expand(poly))

    def __call__(self, f: PolyExpFunction) -> PolyExpFunction:
        return self.apply(f)

    def evaluate(self, f: PolyExpFunction, points: np.ndarray) -> np.ndarray:
        return self.apply(f).evaluate(points)

    ###################################################################################
    #  INSPECTION  #

    def coefficient(self, index: MultiIndex) -> sympy.Expr:
        return self.terms.get(tuple(index), sympy.Integer(0))

    def monomial_coefficient(self, derivative: MultiIndex, monomial: MultiIndex) -> sympy.Expr:
        """Coefficient of ``t^monomial d^derivative``."""
        coefficient = self.coefficient(derivative)
        if coefficient == 0:
            return sympy.Integer(0)
        return sympy.Poly(coefficient, *self.variables).coeff_monomial(tuple(monomial))

    def monomials(self) -> Dict[Tuple[MultiIndex, MultiIndex], sympy.Expr]:
        """All ``(derivative, monomial) -> coefficient`` entries of the canonical form."""
        out = {}
        for index, coefficient in self.terms.items():
            for monomial, value in sympy.Poly(coefficient, *self.variables).terms():
                out[(index, tuple(monomial))] = value
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        return max((sum(index) for index in self.terms), default=0)

    def is_real(self) -> bool:
        return all(sympy.im(value) == 0 for value in self.monomials().values())

    def formal_adjoint(self) -> DiffOperator:
        """``sum_alpha (-1)^|alpha| d^alpha o conj(a_alpha)`` for the L^2 pairing."""
        result = DiffOperator.zero(self.nvars)
        for index, coefficient in self.terms.items():
            derivative = DiffOperator(self.nvars, {index: (-1) ** sum(index)})
            result = result + derivative.compose(DiffOperator.multiplication(self.nvars, sympy.conjugate(coefficient)))
        return result

    def is_formally_symmetric(self) -> bool:
        return self.equals(self.formal_adjoint())

    def reflect(self, index: int) -> DiffOperator:
        """Conjugation by ``t_{index+1} -> -t_{index+1}``."""
        variable = self.variables[index]
        terms = {}
        for multi, coefficient in self.terms.items():
            sign = -1 if multi[index] % 2 else 1
            terms[multi] = sign * coefficient.subs(variable, -variable)
        return DiffOperator(self.nvars, terms)

    def equals(self, other: DiffOperator) -> bool:
        if other.nvars != self.nvars:
            return False
        return (self - other).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for index, coefficient in self.terms.items():
            derivative = "*".join(
                f"d{k + 1}" + (f"^{order}" if order > 1 else "") for k, order in enumerate(index) if order
            )
            parts.append(f"({coefficient})" + (f"*{derivative}" if derivative else ""))
        return " + ".join(parts)


__all__ = ["DiffOperator", "MultiIndex"]
