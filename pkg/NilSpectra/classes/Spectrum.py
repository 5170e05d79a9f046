from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from attrs import define, field
from scipy import sparse

from ..exceptions import InvalidGridError, InvalidParameterError

SYMMETRY_TOLERANCE = 1e-13


@define(frozen=True, slots=True)
class GridSpec:
    """Uniform tensor grid ``[-L, L]^dims`` with N nodes per axis; the operator vanishes beyond the nodes."""

    dims: int
    half_width: float
    points: int

    def __attrs_post_init__(self):
        if self.dims not in (1, 3):
            raise InvalidGridError(f"grids are one- or three-dimensional, got dims={self.dims}")
        if not self.half_width > 0:
            raise InvalidGridError(f"the half width L must be positive, got {self.half_width}")
        if isinstance(self.points, bool) or int(self.points) != self.points or self.points < 16:
            raise InvalidGridError(f"at least 16 points per axis are required, got {self.points}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    @property
    def size(self) -> int:
        return self.points**self.dims

    def nodes(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points)

    def to_dict(self) -> Dict[str, Any]:
        return {"dims": self.dims, "L": self.half_width, "N": self.points, "h": self.spacing}


@define(frozen=True, slots=True)
class SparseOperator:
    """A symmetric sparse matrix with the provenance of its assembly."""

    matrix: sparse.csr_matrix = field(repr=False)
    grid: GridSpec
    provenance: Dict[str, Any] = field(factory=dict)

    def __attrs_post_init__(self):
        matrix = sparse.csr_matrix(self.matrix)
        if matrix.shape != (self.grid.size, self.grid.size):
            raise InvalidParameterError(
                f"matrix shape {matrix.shape} does not match the grid size {self.grid.size}", parameter="matrix"
            )
        object.__setattr__(self, "matrix", matrix)
        if self.asymmetry() > SYMMETRY_TOLERANCE:
            raise InvalidParameterError(
                f"assembled matrix is not symmetric ({self.asymmetry():.3e})", parameter="matrix"
            )

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def norm(self) -> float:
        """Infinity norm (largest absolute row sum)."""
        return float(abs(self.matrix).sum(axis=1).max())

    def asymmetry(self) -> float:
        scale = float(abs(self.matrix).max()) if self.matrix.nnz else 0.0
        if scale == 0.0:
            return 0.0
        difference = self.matrix - self.matrix.T
        return float(abs(difference).max()) / scale if difference.nnz else 0.0

    def label(self) -> str:
        return str(self.provenance.get("problem", "custom"))


@define(frozen=True, slots=True)
class SpectrumResult:
    """Ascending eigenvalues with per-entry residual ``||Av - lv|| / ||v||`` and convergence flags."""

    eigenvalues: np.ndarray = field(repr=False)
    residuals: np.ndarray = field(repr=False)
    converged: np.ndarray = field(repr=False)
    grid: GridSpec
    method: str
    tolerance: float
    provenance: Dict[str, Any] = field(factory=dict)

    @property
    def count(self) -> int:
        return len(self.eigenvalues)

    @property
    def all_converged(self) -> bool:
        return bool(np.all(self.converged))

    def trusted(self, window: Optional[int] = None) -> np.ndarray:
        """Converged eigenvalues among the first ``window`` entries."""
        stop = self.count if window is None else min(window, self.count)
        values = self.eigenvalues[:stop]
        return values[self.converged[:stop]]

    def to_rows(self) -> List[Tuple[int, float, float, bool]]:
        return [
            (index, float(value), float(residual), bool(flag))
            for index, (value, residual, flag) in enumerate(zip(self.eigenvalues, self.residuals, self.converged))
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "problem": self.provenance,
            "grid": self.grid.to_dict(),
            "method": self.method,
            "tolerance": self.tolerance,
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "residuals": [float(v) for v in self.residuals],
            "converged": [bool(v) for v in self.converged],
        }


@define(frozen=True, slots=True)
class ConvergenceReport:
    """Agreement of one problem across grid refinements.

    ``relative_change`` and ``stable_digits`` compare the two finest grids; ``window`` is the
    number of leading eigenvalues that moved by less than the window tolerance between them;
    ``pair_windows`` lists that number for each consecutive pair of grids.
    """

    problem: Dict[str, Any]
    points: Tuple[int, ...]
    relative_change: np.ndarray = field(repr=False)
    stable_digits: np.ndarray = field(repr=False)
    extrapolated: np.ndarray = field(repr=False)
    observed_ratio: Optional[np.ndarray] = field(repr=False)
    expected_ratio: Optional[float]
    window: int
    pair_windows: Tuple[int, ...]

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.pair_windows, self.pair_windows[1:]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "problem": self.problem,
            "N": list(self.points),
            "relative_change": [float(v) for v in self.relative_change],
            "stable_digits": [int(v) for v in self.stable_digits],
            "extrapolated": [float(v) for v in self.extrapolated],
            "observed_ratio": None if self.observed_ratio is None else [float(v) for v in self.observed_ratio],
            "expected_ratio": self.expected_ratio,
            "converged_window": self.window,
            "pair_windows": list(self.pair_windows),
            "monotone": self.monotone,
            "reference": "self-generated",
        }


__all__ = ["ConvergenceReport", "GridSpec", "SparseOperator", "SpectrumResult"]
