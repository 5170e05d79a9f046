from __future__ import annotations

from numbers import Real
from typing import Optional, Tuple

from attrs import define, field

from ..enums import RocklandStatus
from ..exceptions import InvalidParameterError
from .DilationFamily import DilationFamily
from .GradedLieAlgebra import GradedLieAlgebra


@define(frozen=True, slots=True)
class RocklandTerm:
    """``sign * coefficient * X_index^power`` with a 0-based basis index."""

    coefficient: Real
    sign: int
    index: int
    power: int

    def __attrs_post_init__(self):
        if not isinstance(self.coefficient, Real) or not self.coefficient > 0:
            raise InvalidParameterError(
                f"form coefficients must be positive reals, got {self.coefficient!r}", parameter="coeff"
            )
        if self.sign not in (1, -1):
            raise InvalidParameterError(f"term signs are +1 or -1, got {self.sign!r}", parameter="sign")
        if isinstance(self.power, bool) or int(self.power) != self.power or self.power < 2 or self.power % 2:
            raise InvalidParameterError(f"powers must be positive even integers, got {self.power!r}", parameter="power")
        if self.index < 0:
            raise InvalidParameterError(f"basis index {self.index} out of range", parameter="basis")

    def degree(self, D: DilationFamily) -> int:
        """Homogeneous degree ``power * weight`` under the dilations."""
        return self.power * D.weights[self.index]

    def describe(self, algebra: GradedLieAlgebra) -> str:
        sign = "-" if self.sign < 0 else "+"
        return f"{sign}{float(self.coefficient):g}*{algebra.labels[self.index]}^{self.power}"


@define(frozen=True, slots=True)
class RocklandForm:
    """A noncommutative sum of even powers of basis vectors.

    ``nu``, ``nu0`` and ``dilations`` are set once the form has been checked for homogeneity
    against a dilation family; ``status`` records the outcome of that check.
    """

    algebra: GradedLieAlgebra = field(repr=False)
    terms: Tuple[RocklandTerm, ...] = field(converter=tuple)
    nu: Optional[int] = None
    nu0: Optional[int] = None
    status: RocklandStatus = RocklandStatus.UNVALIDATED
    dilations: Optional[DilationFamily] = field(default=None, repr=False)

    def __attrs_post_init__(self):
        if not self.terms:
            raise InvalidParameterError("a form needs at least one term", parameter="terms")
        for term in self.terms:
            if term.index >= self.algebra.dim:
                raise InvalidParameterError(f"basis index {term.index} out of range", parameter="basis")

    @classmethod
    def from_terms(cls, algebra: GradedLieAlgebra, terms) -> RocklandForm:
        """Builds an unvalidated form from ``(coefficient, sign, basis label or index, power)`` tuples."""
        return cls(
            algebra,
            [
                RocklandTerm(coefficient, int(sign), algebra.resolve(key), int(power))
                for coefficient, sign, key, power in terms
            ],
        )

    @property
    def validated(self) -> bool:
        return self.status != RocklandStatus.UNVALIDATED

    @property
    def basis_indices(self) -> Tuple[int, ...]:
        return tuple(term.index for term in self.terms)

    @property
    def max_power(self) -> int:
        return max(term.power for term in self.terms)

    def __str__(self) -> str:
        return " ".join(term.describe(self.algebra) for term in self.terms)


__all__ = ["RocklandForm", "RocklandTerm"]
