from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from attrs import define, field

from ..enums import OrbitKind
from .GradedLieAlgebra import GradedLieAlgebra


@define(frozen=True, slots=True)
class FlatOrbit:
    """The coadjoint orbit through ``rho Z*``, an affine hyperplane over the non-central dual directions.

    ``pfaffian`` is ``|Pf(rho Z*)| = |rho|^(m/2) * unit_pfaffian`` with m = dim - 1.
    """

    algebra: GradedLieAlgebra = field(repr=False)
    rho: float
    center_index: int
    span_indices: Tuple[int, ...]
    pfaffian: float
    unit_pfaffian: float = 1.0

    @property
    def formal_dimension(self) -> float:
        return self.pfaffian

    @property
    def dimension(self) -> int:
        return len(self.span_indices)

    @property
    def rho_power(self) -> Fraction:
        """Power of |rho| in the orbital density ``1 / d_pi``."""
        return Fraction(-self.dimension, 2)


@define(frozen=True, slots=True)
class OrbitalMeasure:
    """Orbital measure of a quasi-norm ball, ``value = prefactor * |rho|^rho_power * lam^lambda_power``
    above the threshold and 0 below it."""

    prefactor: float
    rho_power: Fraction
    lambda_power: Fraction
    value: float
    below_threshold: bool

    def to_dict(self) -> dict:
        return {
            "prefactor": self.prefactor,
            "rho_power": self.rho_power,
            "lambda_power": self.lambda_power,
            "value": self.value,
            "below_threshold": self.below_threshold,
        }


@define(frozen=True, slots=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    samples: int
    hits: int
    seed: int
    box_volume: float
    inflation: float

    def to_dict(self) -> dict:
        return {
            "mc_estimate": self.estimate,
            "mc_stderr": self.stderr,
            "mc_samples": self.samples,
            "mc_hits": self.hits,
            "mc_seed": self.seed,
            "mc_inflation": self.inflation,
        }


@define(frozen=True, slots=True)
class EngelOrbit:
    kind: OrbitKind
    parameters: Tuple[float, ...]

    @property
    def dimension(self) -> int:
        return 0 if self.kind == OrbitKind.POINT else 2

    @property
    def label(self) -> str:
        args = ", ".join(f"{p:g}" for p in self.parameters)
        return f"{self.kind.label}({args})"


__all__ = ["EngelOrbit", "FlatOrbit", "MonteCarloEstimate", "OrbitalMeasure"]
