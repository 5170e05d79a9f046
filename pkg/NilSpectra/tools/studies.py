from __future__ import annotations

import sys
from typing import List, Optional, Sequence, Tuple

from .. import config
from ..classes.Spectrum import ConvergenceReport, GridSpec, SpectrumResult
from ..enums import Problem
from ..exceptions import InvalidParameterError
from ..helpers.Discretization import discretize
from ..helpers.EigenSolver import WINDOW_TOLERANCE, grid_convergence, lowest_eigenvalues


def default_half_width(problem: Problem) -> float:
    return config.DEFAULT_HALF_WIDTH_3D if problem == Problem.HHO_H1 else config.DEFAULT_HALF_WIDTH_1D


def grid_for(problem: Problem, points: int, half_width: Optional[float] = None) -> GridSpec:
    dims = 3 if problem == Problem.HHO_H1 else 1
    return GridSpec(dims, default_half_width(problem) if half_width is None else half_width, points)


def solve_problem(
    problem: Problem,
    points: int,
    k: int,
    half_width: Optional[float] = None,
    rho: float = 1.0,
    theta1: int = 1,
    theta2: int = 1,
    tol: Optional[float] = None,
    method: str = "auto",
) -> SpectrumResult:
    """Discretizes one model problem and returns its k lowest eigenvalues."""
    op = discretize(problem, grid_for(problem, points, half_width), rho=rho, theta1=theta1, theta2=theta2)
    return lowest_eigenvalues(op, k, tol=tol, method=method)


def refinement_study(
    problem: Problem,
    points: Sequence[int],
    k: int,
    half_width: Optional[float] = None,
    rho: float = 1.0,
    theta1: int = 1,
    theta2: int = 1,
    tol: Optional[float] = None,
    method: str = "auto",
    verbose: bool = False,
) -> Tuple[List[SpectrumResult], ConvergenceReport]:
    """Solves the same problem on each grid size in ``points`` and compares the spectra."""
    if len(points) < 2:
        raise InvalidParameterError("a refinement study needs at least two grid sizes", parameter="N")
    results = []
    for N in sorted(points):
        if verbose:
            print(f"solving {problem.label} on N={N}", file=sys.stderr)
        results.append(solve_problem(problem, N, k, half_width, rho, theta1, theta2, tol, method))
    return results, grid_convergence(results, WINDOW_TOLERANCE)


__all__ = ["default_half_width", "grid_for", "refinement_study", "solve_problem"]
