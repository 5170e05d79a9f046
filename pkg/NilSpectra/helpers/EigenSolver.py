from __future__ import annotations

import itertools
import math
import warnings
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from .. import config
from ..classes.Spectrum import ConvergenceReport, SparseOperator, SpectrumResult
from ..exceptions import ConvergenceWarning, InvalidParameterError, MismatchedProblemsError

SHIFT = -1.0
"""Shift of the shift-invert iteration; the assembled operators are positive semidefinite."""

WINDOW_TOLERANCE = 0.01

METHODS = ("auto", "dense", "iterative")


def _start_vector(dimension: int) -> np.ndarray:
    # deterministic, with no parity symmetry
    return np.random.default_rng([config.SAMPLE_SEED, dimension]).standard_normal(dimension)


def _residuals(op: SparseOperator, values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    if vectors.size == 0:
        return np.zeros(0)
    image = op.matrix @ vectors - vectors * values[np.newaxis, :]
    return np.linalg.norm(image, axis=0) / np.linalg.norm(vectors, axis=0)


def _dense(op: SparseOperator, k: int):
    return scipy.linalg.eigh(op.matrix.toarray(), subset_by_index=[0, k - 1])


def _iterative(op: SparseOperator, k: int, tol: float, maxiter: Optional[int]):
    """Shift-invert Lanczos; returns ``(values, vectors, found)`` with the partial result on non-convergence."""
    try:
        values, vectors = eigsh(
            op.matrix, k=k, sigma=SHIFT, which="LM", v0=_start_vector(op.dimension), tol=tol, maxiter=maxiter
        )
        found = k
    except ArpackNoConvergence as err:
        values, vectors = err.eigenvalues, err.eigenvectors
        found = len(values)
    if found:
        # Rayleigh quotients in place of the back-transformed Ritz values
        values = np.einsum("ij,ij->j", vectors, op.matrix @ vectors) / np.einsum("ij,ij->j", vectors, vectors)
    return values, vectors, found


def lowest_eigenvalues(
    op: SparseOperator,
    k: int,
    tol: Optional[float] = None,
    method: str = "auto",
    maxiter: Optional[int] = None,
) -> SpectrumResult:
    """The k smallest eigenvalues of a symmetric operator.

    ``method="auto"`` solves densely (LAPACK) up to ``config.DENSE_DIMENSION_LIMIT`` and runs
    shift-invert ARPACK Lanczos above it. Entries whose residual exceeds ``tol * max(1, ||A||)``
    or that ARPACK did not deliver are flagged and reported with a ConvergenceWarning.
    """
    if tol is None:
        tol = config.DEFAULT_SOLVER_TOLERANCE
    if maxiter is None:
        maxiter = config.DEFAULT_MAX_ITERATIONS
    if method not in METHODS:
        raise InvalidParameterError(f"method must be one of {', '.join(METHODS)}, got {method!r}", parameter="method")
    if isinstance(k, bool) or int(k) != k or not 1 <= k < op.dimension:
        raise InvalidParameterError(f"k must satisfy 1 <= k < {op.dimension}, got {k}", parameter="k")
    if not tol > 0:
        raise InvalidParameterError(f"the tolerance must be positive, got {tol}", parameter="tol")
    if method == "auto":
        method = "dense" if op.dimension <= config.DENSE_DIMENSION_LIMIT else "iterative"

    if method == "dense":
        values, vectors = _dense(op, k)
        found = k
    else:
        values, vectors, found = _iterative(op, k, tol, maxiter)

    order = np.argsort(values)
    values = np.asarray(values)[order]
    vectors = np.asarray(vectors)[:, order]
    residuals = _residuals(op, values, vectors)
    converged = residuals <= tol * max(1.0, op.norm())
    if found < k:
        values = np.concatenate([values, np.full(k - found, np.nan)])
        residuals = np.concatenate([residuals, np.full(k - found, np.inf)])
        converged = np.concatenate([converged, np.zeros(k - found, dtype=bool)])
    if not np.all(converged):
        warnings.warn(
            f"{int(np.count_nonzero(~converged))} of {k} eigenvalues of {op.label()} did not converge",
            ConvergenceWarning,
            stacklevel=2,
        )
    return SpectrumResult(values, residuals, converged, op.grid, method, tol, dict(op.provenance))


###################################################################################
#  REFINEMENT  #


def _problem_key(result: SpectrumResult) -> dict:
    return dict(result.provenance)


def _window(change: np.ndarray, tolerance: float) -> int:
    stable = change < tolerance
    return int(np.argmin(stable)) if not np.all(stable) else len(stable)


def _relative_change(coarse: np.ndarray, fine: np.ndarray) -> np.ndarray:
    # zero eigenvalues fall back to the absolute change
    scale = np.abs(fine)
    return np.abs(fine - coarse) / np.where(scale > 0, scale, 1.0)


def grid_convergence(results: Sequence[SpectrumResult], tolerance: float = WINDOW_TOLERANCE) -> ConvergenceReport:
    """Compares spectra of one problem over grid refinements, assuming ``O(h^2)`` convergence.

    Results are ordered by grid size. The Richardson extrapolation and ``stable_digits`` use the two
    finest grids; with three or more grids the observed ratio of successive changes is reported next
    to the ratio expected from ``h^2`` behavior.
    """
    results = list(results)
    if len(results) < 2:
        raise InvalidParameterError("at least two refinements are required", parameter="results")
    reference = _problem_key(results[0])
    for result in results[1:]:
        if _problem_key(result) != reference or result.grid.dims != results[0].grid.dims:
            raise MismatchedProblemsError(f"cannot compare {_problem_key(result)} with {reference}")
    results.sort(key=lambda result: result.grid.points)
    points = tuple(result.grid.points for result in results)
    if len(set(points)) != len(points):
        raise MismatchedProblemsError(f"refinements must use distinct grids, got N={list(points)}")

    count = min(result.count for result in results)
    values: List[np.ndarray] = [result.eigenvalues[:count] for result in results]
    squares = [result.grid.spacing**2 for result in results]

    pair_windows = []
    for coarse, fine in zip(values, values[1:]):
        pair_windows.append(_window(_relative_change(coarse, fine), tolerance))

    coarse, fine = values[-2], values[-1]
    change = _relative_change(coarse, fine)
    with np.errstate(divide="ignore"):
        digits = np.floor(-np.log10(change))
    digits = np.clip(np.nan_to_num(digits, nan=0.0, posinf=16.0), 0, 16).astype(int)
    extrapolated = (squares[-2] * fine - squares[-1] * coarse) / (squares[-2] - squares[-1])

    observed = expected = None
    if len(results) >= 3:
        first, second, third = values[-3], values[-2], values[-1]
        with np.errstate(divide="ignore", invalid="ignore"):
            observed = (first - second) / (second - third)
        expected = (squares[-3] - squares[-2]) / (squares[-2] - squares[-1])

    return ConvergenceReport(
        problem=reference,
        points=points,
        relative_change=change,
        stable_digits=digits,
        extrapolated=extrapolated,
        observed_ratio=observed,
        expected_ratio=expected,
        window=pair_windows[-1],
        pair_windows=tuple(pair_windows),
    )


###################################################################################
#  REFERENCE SPECTRA  #


def heisenberg_oscillator_eigenvalues(rho: float, n: int, count: int) -> np.ndarray:
    """The first ``count`` values ``2 pi |rho| (2|s| + n)`` over ``s`` in ``N_0^n``, with multiplicity."""
    if rho == 0:
        raise InvalidParameterError("rho must be non-zero", parameter="rho")
    if n < 1 or count < 1:
        raise InvalidParameterError("n and count must be positive", parameter="count")
    values: List[float] = []
    for level in itertools.count():
        multiplicity = math.comb(level + n - 1, n - 1)
        values.extend([2.0 * math.pi * abs(rho) * (2 * level + n)] * multiplicity)
        if len(values) >= count:
            return np.array(values[:count])


__all__ = [
    "grid_convergence",
    "heisenberg_oscillator_eigenvalues",
    "lowest_eigenvalues",
]
