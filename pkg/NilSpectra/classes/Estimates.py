from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from attrs import define


def rational_dict(value: Fraction) -> Dict[str, int]:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


@define(frozen=True, slots=True)
class CountEstimate:
    """``N(lam) ~ prefactor * |rho|^rho_power * lam^lambda_exponent`` above the threshold."""

    lambda_exponent: Fraction
    rho_power: Fraction
    prefactor: float
    threshold: str
    source: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda_exponent": rational_dict(self.lambda_exponent),
            "rho_power": rational_dict(self.rho_power),
            "prefactor": self.prefactor,
            "threshold": self.threshold,
            "source": self.source,
        }


@define(frozen=True, slots=True)
class MultiplierQuery:
    """Exponent calculator for ``L^p -> L^q`` bounds of heat and Bessel multipliers of a Rockland operator.

    ``alpha = Q / nu``; the outputs are ``None`` until ``multiplier_bounds`` fills them in.
    """

    p: Fraction
    q: Fraction
    Q: int
    nu: int
    alpha: Optional[Fraction] = None
    heat_exponent: Optional[Fraction] = None
    gamma_threshold: Optional[Fraction] = None
    sobolev_gap: Optional[Fraction] = None
    classical_sobolev_gap: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"p": rational_dict(self.p), "q": rational_dict(self.q), "Q": self.Q, "nu": self.nu}
        for key in ("alpha", "heat_exponent", "gamma_threshold", "sobolev_gap", "classical_sobolev_gap"):
            value = getattr(self, key)
            data[key] = None if value is None else rational_dict(value)
        return data


@define(frozen=True, slots=True)
class FitResult:
    """Least-squares line ``log y = slope * log x + intercept`` over ``window`` (half-open index range)."""

    slope: float
    intercept: float
    stderr: float
    count: int
    window: Tuple[int, int]
    kind: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "stderr": self.stderr,
            "points": self.count,
            "window": list(self.window),
            "kind": self.kind,
        }


__all__ = ["CountEstimate", "FitResult", "MultiplierQuery", "rational_dict"]
