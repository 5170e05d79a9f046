from __future__ import annotations

from functools import reduce
from math import gcd
from numbers import Number
from typing import Optional, Sequence, Tuple

import numpy as np
from attrs import define, field

from ..exceptions import IncompatibleOperandsError, InvalidParameterError, NotAnAutomorphismError
from .GradedLieAlgebra import GradedLieAlgebra


def _as_int_tuple(values) -> Tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v:
            raise InvalidParameterError(f"weights must be integers, got {v!r}", parameter="weights")
        out.append(int(v))
    return tuple(out)


@define(frozen=True, slots=True)
class DilationFamily:
    """Diagonal dilations ``D_r = exp(A log r)`` with ``A = diag(weights)`` on the algebra's basis.

    ``weights`` are gcd-normalized; ``raw_weights`` keeps the tuple as supplied and
    ``scale = gcd(raw_weights)`` relates the two.
    """

    algebra: GradedLieAlgebra = field(eq=False, repr=False)
    weights: Tuple[int, ...] = field(converter=_as_int_tuple)
    raw_weights: Optional[Tuple[int, ...]] = field(default=None, eq=False)

    def __attrs_post_init__(self):
        if len(self.weights) != self.algebra.dim:
            raise InvalidParameterError(
                f"expected {self.algebra.dim} weights, got {len(self.weights)}", parameter="weights"
            )
        if any(w < 1 for w in self.weights):
            raise InvalidParameterError("weights must be positive integers", parameter="weights")
        raw = _as_int_tuple(self.raw_weights) if self.raw_weights is not None else self.weights
        common = reduce(gcd, raw)
        if tuple(w // common for w in raw) != self.weights:
            raise InvalidParameterError("weights must be the gcd-normalized raw weights", parameter="weights")
        object.__setattr__(self, "raw_weights", raw)
        violation = self.first_violation()
        if violation is not None:
            i, j, k = violation
            labels = self.algebra.labels
            raise NotAnAutomorphismError(
                f"weights do not define automorphisms: [{labels[i]}, {labels[j]}] has a {labels[k]} component "
                f"but {self.weights[i]} + {self.weights[j]} != {self.weights[k]}",
                triple=(labels[i], labels[j], labels[k]),
            )

    @classmethod
    def from_weights(cls, algebra: GradedLieAlgebra, weights: Sequence[int]) -> DilationFamily:
        raw = _as_int_tuple(weights)
        if len(raw) != algebra.dim:
            raise InvalidParameterError(f"expected {algebra.dim} weights, got {len(raw)}", parameter="weights")
        if any(w < 1 for w in raw):
            raise InvalidParameterError("weights must be positive integers", parameter="weights")
        common = reduce(gcd, raw)
        return cls(algebra, tuple(w // common for w in raw), raw)

    @classmethod
    def from_generator(cls, algebra: GradedLieAlgebra, matrix) -> DilationFamily:
        """Accepts the dilation generator ``A`` as a matrix; only diagonal generators are supported."""
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (algebra.dim, algebra.dim):
            raise InvalidParameterError(f"generator must be {algebra.dim}x{algebra.dim}", parameter="generator")
        if np.any(matrix - np.diag(np.diag(matrix)) != 0):
            raise InvalidParameterError(
                "only diagonal dilation generators (the basis is an eigenbasis) are supported", parameter="generator"
            )
        return cls.from_weights(algebra, np.diag(matrix).tolist())

    def first_violation(self) -> Optional[Tuple[int, int, int]]:
        for i, j, k in sorted(self.algebra.structure_constants):
            if self.weights[i] + self.weights[j] != self.weights[k]:
                return (i, j, k)
        return None

    @property
    def scale(self) -> int:
        return self.raw_weights[0] // self.weights[0]

    @property
    def Q(self) -> int:
        """Homogeneous dimension, the trace of the generator."""
        return sum(self.weights)

    @property
    def Q_center(self) -> int:
        return sum(self.weights[i] for i in self.algebra.central_indices())

    @property
    def generator(self) -> np.ndarray:
        return np.diag(np.array(self.weights, dtype=float))

    @property
    def max_weight(self) -> int:
        return max(self.weights)

    def weight_of(self, key) -> int:
        return self.weights[self.algebra.resolve(key)]

    def matrix(self, r: float) -> np.ndarray:
        if r <= 0:
            raise InvalidParameterError(f"dilation parameter must be positive, got {r}", parameter="r")
        return np.diag(np.power(float(r), np.array(self.weights, dtype=float)))

    def check_algebra(self, algebra: GradedLieAlgebra):
        if algebra is not self.algebra and algebra != self.algebra:
            raise IncompatibleOperandsError("the dilation family belongs to a different algebra")


@define(frozen=True, slots=True)
class DualVector:
    """A functional on the algebra, ``coeffs[j]`` pairs with the j-th basis vector."""

    algebra: GradedLieAlgebra = field(eq=False, repr=False)
    coeffs: Tuple[float, ...] = field(converter=lambda values: tuple(float(v) for v in values))

    def __attrs_post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise InvalidParameterError(
                f"expected {self.algebra.dim} coordinates, got {len(self.coeffs)}", parameter="coeffs"
            )

    @classmethod
    def basis(cls, algebra: GradedLieAlgebra, key, scale: Number = 1.0) -> DualVector:
        coeffs = [0.0] * algebra.dim
        coeffs[algebra.resolve(key)] = float(scale)
        return cls(algebra, coeffs)

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs)

    def __add__(self, other: DualVector) -> DualVector:
        if not isinstance(other, DualVector):
            return NotImplemented
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise IncompatibleOperandsError("functionals live on different algebras")
        return DualVector(self.algebra, self.as_array() + other.as_array())


__all__ = ["DilationFamily", "DualVector"]
