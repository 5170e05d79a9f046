from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy

from ..classes.Elements import AlgebraElement
from ..classes.GradedLieAlgebra import GradedLieAlgebra, StructureConstants
from ..enums import GroupFamily
from ..exceptions import IncompatibleOperandsError, InvalidParameterError, UnsupportedStepError

HALF = Fraction(1, 2)

SparseVector = Dict[int, Fraction]


def _set_bracket(constants: StructureConstants, a: int, b: int, k: int, value: Fraction):
    # stores [e_a, e_b] = value * e_k with the i < j orientation
    if a < b:
        constants[(a, b, k)] = Fraction(value)
    else:
        constants[(b, a, k)] = -Fraction(value)


def heisenberg_labels(n: int) -> List[str]:
    return [f"X_{k}" for k in range(2 * n + 1, 0, -1)]


def dynin_folland_labels(n: int) -> List[str]:
    return ["Z"] + [f"Y_{k}" for k in range(1, 2 * n + 2)] + heisenberg_labels(n)


def _check_n(n: int):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}", parameter="n")


@lru_cache(maxsize=None)
def build_heisenberg(n: int) -> GradedLieAlgebra:
    """The Heisenberg algebra on the basis ``(X_{2n+1}, X_{2n}, ..., X_1)``."""
    _check_n(n)
    labels = heisenberg_labels(n)
    x = {k: labels.index(f"X_{k}") for k in range(1, 2 * n + 2)}
    constants: StructureConstants = {}
    for j in range(1, n + 1):
        _set_bracket(constants, x[j], x[n + j], x[2 * n + 1], 1)
    strata = [2 if label == f"X_{2 * n + 1}" else 1 for label in labels]
    return GradedLieAlgebra(labels, constants, strata, step=2, family=GroupFamily.HEISENBERG, n=n)


@lru_cache(maxsize=None)
def build_dynin_folland(n: int) -> GradedLieAlgebra:
    """The Dynin-Folland algebra on the basis ``(Z, Y_1..Y_{2n+1}, X_{2n+1}..X_1)``."""
    _check_n(n)
    labels = dynin_folland_labels(n)
    z = labels.index("Z")
    x = {k: labels.index(f"X_{k}") for k in range(1, 2 * n + 2)}
    y = {k: labels.index(f"Y_{k}") for k in range(1, 2 * n + 2)}
    top = 2 * n + 1

    constants: StructureConstants = {}
    for k in range(1, top + 1):
        _set_bracket(constants, x[k], y[k], z, 1)
    for j in range(1, n + 1):
        _set_bracket(constants, x[j], x[n + j], x[top], 1)
        _set_bracket(constants, x[n + j], y[top], y[j], HALF)
        _set_bracket(constants, x[j], y[top], y[n + j], -HALF)

    strata = []
    for label in labels:
        if label == "Z":
            strata.append(3)
        elif label in (f"Y_{top}",) or (label.startswith("X_") and label != f"X_{top}"):
            strata.append(1)
        else:
            strata.append(2)
    return GradedLieAlgebra(labels, constants, strata, step=3, family=GroupFamily.DYNIN_FOLLAND, n=n)


@lru_cache(maxsize=None)
def build_engel() -> GradedLieAlgebra:
    """The Engel algebra on the basis ``(X_4, X_3, X_2, X_1)``."""
    labels = ["X_4", "X_3", "X_2", "X_1"]
    x = {k: labels.index(f"X_{k}") for k in range(1, 5)}
    constants: StructureConstants = {}
    _set_bracket(constants, x[1], x[2], x[3], 1)
    _set_bracket(constants, x[1], x[3], x[4], 1)
    return GradedLieAlgebra(labels, constants, [3, 2, 1, 1], step=3, family=GroupFamily.ENGEL)


def build_algebra(family: GroupFamily, n: int = None) -> GradedLieAlgebra:
    if family == GroupFamily.HEISENBERG:
        return build_heisenberg(n)
    if family == GroupFamily.DYNIN_FOLLAND:
        return build_dynin_folland(n)
    if family == GroupFamily.ENGEL:
        return build_engel()
    raise InvalidParameterError(f"no built-in algebra for family {family.name}", parameter="group")


###################################################################################
#  BRACKETS  #


def _bracket_sparse(algebra: GradedLieAlgebra, u: SparseVector, v: SparseVector) -> SparseVector:
    result: SparseVector = {}
    for i, a in u.items():
        if a == 0:
            continue
        for j, b in v.items():
            if b == 0 or i == j:
                continue
            for k, c in algebra.bracket_terms(i, j):
                result[k] = result.get(k, 0) + a * b * c
    return {k: value for k, value in result.items() if value != 0}


def bracket(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise IncompatibleOperandsError("cannot bracket elements of different algebras")
    algebra = a.algebra
    exact = a.exact and b.exact
    result = [Fraction(0) if exact else 0.0] * algebra.dim
    for (i, j, k), c in algebra.structure_constants.items():
        weight = a.coeffs[i] * b.coeffs[j] - a.coeffs[j] * b.coeffs[i]
        if weight:
            result[k] += (c if exact else float(c)) * weight
    return AlgebraElement(algebra, result)


def jacobi_residual(algebra: GradedLieAlgebra) -> Fraction:
    """Largest absolute coordinate of the Jacobi sum over all basis triples."""
    worst = Fraction(0)
    dim = algebra.dim
    basis = [{i: Fraction(1)} for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                total: SparseVector = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = _bracket_sparse(algebra, basis[b], basis[c])
                    for m, value in _bracket_sparse(algebra, basis[a], inner).items():
                        total[m] = total.get(m, 0) + value
                for value in total.values():
                    worst = max(worst, abs(Fraction(value)))
    return worst


def gradation_violations(algebra: GradedLieAlgebra) -> List[Tuple[int, int, int]]:
    return [
        (i, j, k)
        for (i, j, k) in algebra.structure_constants
        if algebra.strata[k] != algebra.strata[i] + algebra.strata[j]
    ]


###################################################################################
#  STRUCTURE  #


def _rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _span_matrix(dim: int, vectors: Sequence[SparseVector]) -> sympy.Matrix:
    if not vectors:
        return sympy.zeros(dim, 0)
    columns = [[_rational(v.get(i, 0)) for i in range(dim)] for v in vectors]
    return sympy.Matrix(columns).T


def _brackets_of_spans(algebra, left: Sequence[SparseVector], right: Sequence[SparseVector]):
    vectors = []
    for u in left:
        for v in right:
            w = _bracket_sparse(algebra, u, v)
            if w:
                vectors.append(w)
    return vectors


def _independent(dim: int, vectors: Sequence[SparseVector]) -> List[SparseVector]:
    if not vectors:
        return []
    matrix = _span_matrix(dim, vectors)
    _, pivots = matrix.rref()
    return [vectors[p] for p in pivots]


def nilpotency_step(algebra: GradedLieAlgebra) -> int:
    """Length of the lower central series, computed in exact arithmetic."""
    dim = algebra.dim
    basis = [{i: Fraction(1)} for i in range(dim)]
    current = basis
    step = 0
    while current:
        step += 1
        current = _independent(dim, _brackets_of_spans(algebra, basis, current))
        if step > dim:
            raise InvalidParameterError("the algebra is not nilpotent", parameter="structure_constants")
    return step


def center_dimension(algebra: GradedLieAlgebra) -> int:
    dim = algebra.dim
    rows = []
    # v lies in the center iff [v, e_j] = 0 for every j
    for j in range(dim):
        block = [[0] * dim for _ in range(dim)]
        for i in range(dim):
            for k, c in algebra.bracket_terms(i, j):
                block[k][i] += c
        rows.extend(block)
    matrix = sympy.Matrix([[_rational(x) for x in row] for row in rows])
    return dim - matrix.rank()


def is_stratified(algebra: GradedLieAlgebra) -> bool:
    """True if the first stratum generates each higher stratum by brackets."""
    dim = algebra.dim
    first = [{i: Fraction(1)} for i in algebra.indices_of_stratum(1)]
    if not first:
        return False
    layer = first
    for stratum in range(2, algebra.depth + 1):
        expected = len(algebra.indices_of_stratum(stratum))
        layer = _independent(dim, _brackets_of_spans(algebra, first, layer))
        if len(layer) != expected:
            return False
        if any(algebra.strata[i] != stratum for v in layer for i in v):
            return False
    return True


def restrict(algebra: GradedLieAlgebra, labels: Sequence[str]) -> GradedLieAlgebra:
    """The subalgebra spanned by the given basis vectors, re-indexed in the given order."""
    positions = [algebra.index(label) for label in labels]
    local = {p: i for i, p in enumerate(positions)}
    constants: StructureConstants = {}
    for a in range(len(positions)):
        for b in range(a + 1, len(positions)):
            for k, c in algebra.bracket_terms(positions[a], positions[b]):
                if k not in local:
                    raise IncompatibleOperandsError(
                        f"[{labels[a]}, {labels[b]}] leaves the span (component {algebra.labels[k]})"
                    )
                constants[(a, b, local[k])] = c
    strata = [algebra.strata[p] for p in positions]
    sub = GradedLieAlgebra(list(labels), constants, strata, step=max(1, algebra.step))
    return GradedLieAlgebra(list(labels), constants, strata, step=nilpotency_step(sub))


###################################################################################
#  BAKER-CAMPBELL-HAUSDORFF  #


def bch_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Exponential-chart product ``log(exp(a) exp(b))`` for algebras of step at most three."""
    if a.algebra.step > 3:
        raise UnsupportedStepError(
            f"the truncated BCH series is exact only up to step 3, got step {a.algebra.step}",
            step=a.algebra.step,
        )
    exact = a.exact and b.exact
    half = HALF if exact else 0.5
    twelfth = Fraction(1, 12) if exact else 1.0 / 12.0
    ab = bracket(a, b)
    return a + b + half * ab + twelfth * (bracket(a, ab) + bracket(b, bracket(b, a)))


__all__ = [
    "bch_multiply",
    "bracket",
    "build_algebra",
    "build_dynin_folland",
    "build_engel",
    "build_heisenberg",
    "center_dimension",
    "dynin_folland_labels",
    "gradation_violations",
    "heisenberg_labels",
    "is_stratified",
    "jacobi_residual",
    "nilpotency_step",
    "restrict",
]
