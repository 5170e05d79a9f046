from __future__ import annotations

import numpy as np
from scipy import sparse

from ..classes.Spectrum import GridSpec, SparseOperator
from ..enums import Problem
from ..exceptions import InvalidGridError, InvalidParameterError


def _check_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}", parameter=name)
    return int(value)


def _check_rho(rho) -> float:
    rho = float(rho)
    if rho == 0.0:
        raise InvalidParameterError("rho must be non-zero", parameter="rho")
    return rho


def second_difference(grid: GridSpec) -> sparse.csr_matrix:
    """``-d^2/dt^2`` by central second differences, ``(2u_i - u_{i-1} - u_{i+1}) / h^2``."""
    n = grid.points
    h2 = grid.spacing**2
    main = np.full(n, 2.0 / h2)
    off = np.full(n - 1, -1.0 / h2)
    return sparse.diags([off, main, off], [-1, 0, 1], format="csr")


def central_difference(grid: GridSpec) -> sparse.csr_matrix:
    """Skew-symmetric ``d/dt``, ``(u_{i+1} - u_{i-1}) / 2h``."""
    n = grid.points
    off = np.full(n - 1, 1.0 / (2.0 * grid.spacing))
    return sparse.diags([-off, off], [-1, 1], format="csr")


def _symmetrize(matrix) -> sparse.csr_matrix:
    matrix = sparse.csr_matrix(matrix)
    return sparse.csr_matrix(0.5 * (matrix + matrix.T))


def discretize_1d(theta1: int, theta2: int, rho, grid: GridSpec) -> SparseOperator:
    """``(-d^2)^theta2 + (2 pi |rho| t)^(2 theta1)``; theta1 = theta2 = 1 is the harmonic oscillator on R."""
    if grid.dims != 1:
        raise InvalidGridError(f"discretize_1d needs a one-dimensional grid, got dims={grid.dims}")
    theta1 = _check_positive_int(theta1, "theta1")
    theta2 = _check_positive_int(theta2, "theta2")
    rho = _check_rho(rho)

    laplacian = second_difference(grid)
    kinetic = laplacian
    for _ in range(theta2 - 1):
        kinetic = kinetic @ laplacian
    potential = sparse.diags(np.power(2.0 * np.pi * abs(rho) * grid.nodes(), 2 * theta1))
    problem = Problem.EUCLID_1D if theta1 == theta2 == 1 else Problem.ANHARMONIC_1D
    return SparseOperator(
        _symmetrize(kinetic + potential),
        grid,
        {"problem": problem.label, "theta1": theta1, "theta2": theta2, "rho": rho, "L": grid.half_width},
    )


def discretize_hho_h1(rho, grid: GridSpec) -> SparseOperator:
    """The harmonic oscillator on H_1 as ``D1^T D1 + D2^T D2 + M^2``.

    ``D1``, ``D2`` discretize ``d1 - t2 d3 / 2`` and ``d2 + t1 d3 / 2`` with central differences and
    ``M = diag(2 pi |rho| t3)``. Unknowns are ordered with t3 fastest. Central differences decouple
    the grid into parity classes, so every continuum eigenvalue shows up in several near-copies.
    """
    if grid.dims != 3:
        raise InvalidGridError(f"discretize_hho_h1 needs a three-dimensional grid, got dims={grid.dims}")
    rho = _check_rho(rho)

    identity = sparse.identity(grid.points, format="csr")
    difference = central_difference(grid)
    position = sparse.diags(grid.nodes())

    def axis(op, k):
        factors = [identity, identity, identity]
        factors[k] = op
        return sparse.kron(sparse.kron(factors[0], factors[1]), factors[2], format="csr")

    c1, c2, c3 = (axis(difference, k) for k in range(3))
    t1, t2, t3 = (axis(position, k) for k in range(3))
    # t_k and d_3 act on different axes for k = 1, 2, so the products are already symmetrized
    d1 = c1 - 0.5 * (t2 @ c3)
    d2 = c2 + 0.5 * (t1 @ c3)
    m = 2.0 * np.pi * abs(rho) * t3
    matrix = d1.T @ d1 + d2.T @ d2 + m @ m
    return SparseOperator(
        _symmetrize(matrix),
        grid,
        {"problem": Problem.HHO_H1.label, "rho": rho, "L": grid.half_width},
    )


def discretize(problem: Problem, grid: GridSpec, rho=1.0, theta1: int = 1, theta2: int = 1) -> SparseOperator:
    if problem == Problem.HHO_H1:
        return discretize_hho_h1(rho, grid)
    if problem == Problem.EUCLID_1D:
        return discretize_1d(1, 1, rho, grid)
    return discretize_1d(theta1, theta2, rho, grid)


__all__ = [
    "central_difference",
    "discretize",
    "discretize_1d",
    "discretize_hho_h1",
    "second_difference",
]
