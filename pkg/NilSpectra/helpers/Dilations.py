from __future__ import annotations

import itertools
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

from ..classes.DilationFamily import DilationFamily, DualVector
from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..enums import GroupFamily
from ..exceptions import InvalidParameterError
from .LieAlgebra import build_dynin_folland, build_heisenberg


def canonical_dilations(algebra: GradedLieAlgebra) -> DilationFamily:
    return DilationFamily.from_weights(algebra, algebra.strata)


def validate_weights(algebra: GradedLieAlgebra, weights: Sequence[int]) -> DilationFamily:
    """Returns the normalized family, or raises NotAnAutomorphismError naming the violating triple."""
    return DilationFamily.from_weights(algebra, weights)


def df_weights(n: int, theta: Sequence[int]) -> DilationFamily:
    """Dilations of the Dynin-Folland algebra from the weights of its generators.

    ``theta`` lists the weights of ``X_1..X_{2n}, Y_{2n+1}`` (length 2n+1). A triple ``(a, b, c)``
    is read as ``X_1..X_n -> a``, ``X_{n+1}..X_{2n} -> b``, ``Y_{2n+1} -> c``; a full tuple of
    length 4n+3 is taken as is.
    """
    algebra = build_dynin_folland(n)
    theta = [int(t) for t in theta]
    if len(theta) == algebra.dim:
        return validate_weights(algebra, theta)
    if len(theta) == 3 and n > 1:
        theta = [theta[0]] * n + [theta[1]] * n + [theta[2]]
    if len(theta) != 2 * n + 1:
        raise InvalidParameterError(
            f"expected 3, {2 * n + 1} or {algebra.dim} Dynin-Folland weights, got {len(theta)}", parameter="weights"
        )
    top = theta[2 * n]
    full = {"Z": theta[0] + theta[n] + top, f"X_{2 * n + 1}": theta[0] + theta[n], f"Y_{2 * n + 1}": top}
    for j in range(1, n + 1):
        full[f"X_{j}"] = theta[j - 1]
        full[f"X_{n + j}"] = theta[n + j - 1]
        full[f"Y_{j}"] = theta[n + j - 1] + top
        full[f"Y_{n + j}"] = theta[j - 1] + top
    return validate_weights(algebra, [full[label] for label in algebra.labels])


def df_generator_weights(D: DilationFamily) -> Tuple[int, ...]:
    """Inverse of ``df_weights``: the normalized weights of ``X_1..X_{2n}, Y_{2n+1}``."""
    algebra = D.algebra
    n = algebra.n
    labels = [f"X_{j}" for j in range(1, 2 * n + 1)] + [f"Y_{2 * n + 1}"]
    return tuple(D.weight_of(label) for label in labels)


def anharmonic_h1_weights(theta1: int, theta2: int) -> DilationFamily:
    """H_1 with ``X_1 -> theta1``, ``X_2 -> theta2``, ``X_3 -> theta1 + theta2``."""
    algebra = build_heisenberg(1)
    weights = {"X_1": theta1, "X_2": theta2, "X_3": theta1 + theta2}
    return validate_weights(algebra, [weights[label] for label in algebra.labels])


def parse_weights(algebra: GradedLieAlgebra, weights: Sequence[int]) -> DilationFamily:
    """Reads a weight tuple as the CLI and documents supply it for the given algebra."""
    if algebra.family == GroupFamily.DYNIN_FOLLAND and len(weights) != algebra.dim:
        return df_weights(algebra.n, weights)
    return validate_weights(algebra, weights)


def enumerate_df_weights(n: int, max_weight: int) -> List[DilationFamily]:
    if max_weight < 1:
        raise InvalidParameterError("max_weight must be at least 1", parameter="max_weight")
    families = []
    values = range(1, max_weight + 1)
    for first in itertools.product(values, repeat=n):
        for second in itertools.product(values, repeat=n):
            if len({a + b for a, b in zip(first, second)}) != 1:
                continue
            for top in values:
                theta = list(first) + list(second) + [top]
                if reduce(gcd, theta) != 1:
                    continue
                families.append(df_weights(n, theta))
    return families


###################################################################################
#  QUASI-NORMS  #


def quasinorm_array(coords: np.ndarray, weights: Sequence[int]) -> np.ndarray:
    """Row-wise ``max_j |l_j|^(1/theta_j)`` for an ``(m, d)`` array."""
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    exponents = 1.0 / np.asarray(weights, dtype=float)
    return np.max(np.power(np.abs(coords), exponents), axis=1)


def quasinorm(l: DualVector, D: DilationFamily) -> float:
    D.check_algebra(l.algebra)
    return float(quasinorm_array(l.as_array(), D.weights)[0])


def dilate_dual(l: DualVector, r: float, D: DilationFamily) -> DualVector:
    if r <= 0:
        raise InvalidParameterError(f"dilation parameter must be positive, got {r}", parameter="r")
    D.check_algebra(l.algebra)
    factors = np.power(float(r), np.asarray(D.weights, dtype=float))
    return DualVector(l.algebra, l.as_array() * factors)


def quasi_triangle_constant(D: DilationFamily, samples: int = 1000, seed: int = 0) -> float:
    """Largest observed ``|l + l'| / (|l| + |l'|)`` over random pairs."""
    rng = np.random.default_rng(seed)
    dim = D.algebra.dim
    left = rng.normal(size=(samples, dim)) * rng.uniform(0.01, 10.0, size=(samples, 1))
    right = rng.normal(size=(samples, dim)) * rng.uniform(0.01, 10.0, size=(samples, 1))
    ratio = quasinorm_array(left + right, D.weights) / (
        quasinorm_array(left, D.weights) + quasinorm_array(right, D.weights)
    )
    return float(np.max(ratio))


def quasi_triangle_bound(D: DilationFamily) -> float:
    return float(2 ** (D.max_weight - 1))


__all__ = [
    "anharmonic_h1_weights",
    "canonical_dilations",
    "df_generator_weights",
    "df_weights",
    "dilate_dual",
    "enumerate_df_weights",
    "parse_weights",
    "quasi_triangle_bound",
    "quasi_triangle_constant",
    "quasinorm",
    "quasinorm_array",
    "validate_weights",
]
