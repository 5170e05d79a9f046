from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

import numpy as np
import sympy

from .. import config
from ..classes.DilationFamily import DilationFamily, DualVector
from ..classes.FlatOrbit import EngelOrbit, FlatOrbit, MonteCarloEstimate, OrbitalMeasure
from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..enums import GroupFamily, OrbitKind
from ..exceptions import (
    DegenerateOrbitError,
    IncompatibleOperandsError,
    InvalidParameterError,
    UnsupportedAlgebraError,
)
from .Dilations import quasinorm_array
from .LieAlgebra import center_dimension
from .Parallel import parallel_map


def skew_form(algebra: GradedLieAlgebra, center: int, rho=1) -> sympy.Matrix:
    """``B(X_i, X_j) = rho * c_ij^center`` on the non-central basis vectors, exact."""
    span = [i for i in range(algebra.dim) if i != center]
    rho = sympy.nsimplify(rho, rational=True)
    matrix = sympy.zeros(len(span), len(span))
    for a, i in enumerate(span):
        for b, j in enumerate(span):
            for k, c in algebra.bracket_terms(i, j):
                if k == center:
                    matrix[a, b] += rho * sympy.Rational(c.numerator, c.denominator)
    return matrix


def flat_orbit(algebra: GradedLieAlgebra, rho: float) -> FlatOrbit:
    if rho == 0:
        raise DegenerateOrbitError("the orbit through rho Z* needs rho != 0")
    centers = algebra.central_indices()
    if len(centers) != 1 or center_dimension(algebra) != 1:
        raise UnsupportedAlgebraError(
            f"flat orbits need a one-dimensional center spanned by a basis vector ({algebra!r})"
        )
    center = centers[0]
    determinant = skew_form(algebra, center).det()
    if determinant == 0:
        raise UnsupportedAlgebraError(f"the skew form of {algebra!r} is degenerate, its generic orbits are not flat")
    unit = float(sympy.sqrt(sympy.Abs(determinant)))
    span = tuple(i for i in range(algebra.dim) if i != center)
    pfaffian = abs(float(rho)) ** (len(span) / 2) * unit
    return FlatOrbit(algebra, float(rho), center, span, pfaffian, unit)


def _threshold_passed(orbit: FlatOrbit, lam: float, D: DilationFamily) -> bool:
    center_weight = D.weights[orbit.center_index]
    return abs(orbit.rho) ** (1.0 / center_weight) <= lam


def ball_orbit_measure_closed(orbit: FlatOrbit, lam: float, D: DilationFamily) -> OrbitalMeasure:
    """Orbital measure of the quasi-norm ball of radius ``lam`` intersected with the orbit."""
    if D.algebra is not orbit.algebra and D.algebra != orbit.algebra:
        raise IncompatibleOperandsError("the dilation family belongs to a different algebra than the orbit")
    if lam <= 0:
        raise InvalidParameterError(f"lambda must be positive, got {lam}", parameter="lambda")
    m = orbit.dimension
    prefactor = 2.0**m / orbit.unit_pfaffian
    lambda_power = Fraction(D.Q - D.weights[orbit.center_index])
    if not _threshold_passed(orbit, lam, D):
        return OrbitalMeasure(prefactor, orbit.rho_power, lambda_power, 0.0, True)
    volume = 1.0
    for j in orbit.span_indices:
        volume *= 2.0 * lam ** D.weights[j]
    return OrbitalMeasure(prefactor, orbit.rho_power, lambda_power, volume / orbit.pfaffian, False)


def _count_chunk(args) -> int:
    seed, chunk, size, half_sides, full_weights, center, rho, lam = args
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, chunk])))
    points = rng.uniform(-1.0, 1.0, size=(size, len(half_sides))) * half_sides
    functionals = np.insert(points, center, rho, axis=1)
    return int(np.count_nonzero(quasinorm_array(functionals, full_weights) <= lam))


def ball_orbit_measure_mc(
    orbit: FlatOrbit,
    lam: float,
    D: DilationFamily,
    samples: int,
    seed: int,
    acceptance: Optional[float] = None,
    workers: Optional[int] = None,
) -> MonteCarloEstimate:
    """Rejection-sampling estimate of ``ball_orbit_measure_closed``.

    Points are drawn in the quasi-norm box of radius ``c * lam`` over the orbit's coordinates, with
    ``c`` set so that the expected acceptance ratio is ``acceptance``; a point counts when the full
    functional ``rho Z* + l`` lies in the quasi-norm ball of radius ``lam``. Every chunk of
    ``config.MONTE_CARLO_CHUNK`` samples draws from its own Philox stream keyed by ``(seed, chunk)``
    and hits are summed as integers.
    """
    if samples < 10_000:
        raise InvalidParameterError(f"at least 10^4 samples are required, got {samples}", parameter="samples")
    if seed < 0:
        raise InvalidParameterError("the seed must be non-negative", parameter="seed")
    if lam <= 0:
        raise InvalidParameterError(f"lambda must be positive, got {lam}", parameter="lambda")
    D.check_algebra(orbit.algebra)
    if acceptance is None:
        acceptance = config.MONTE_CARLO_ACCEPTANCE
    if not 0 < acceptance <= 1:
        raise InvalidParameterError("the acceptance ratio must lie in (0, 1]", parameter="acceptance")

    span_weights = np.array([D.weights[j] for j in orbit.span_indices], dtype=float)
    inflation = acceptance ** (-1.0 / span_weights.sum())
    half_sides = np.power(inflation * lam, span_weights)
    box_volume = float(np.prod(2.0 * half_sides))

    chunk_size = config.MONTE_CARLO_CHUNK
    jobs = []
    for chunk in range(math.ceil(samples / chunk_size)):
        size = min(chunk_size, samples - chunk * chunk_size)
        jobs.append((seed, chunk, size, half_sides, D.weights, orbit.center_index, orbit.rho, lam))
    hits = sum(parallel_map(_count_chunk, jobs, workers))

    p = hits / samples
    scale = box_volume / orbit.pfaffian
    return MonteCarloEstimate(
        estimate=scale * p,
        stderr=scale * math.sqrt(p * (1.0 - p) / samples),
        samples=samples,
        hits=hits,
        seed=seed,
        box_volume=box_volume,
        inflation=inflation,
    )


def engel_orbit_family(l: DualVector) -> EngelOrbit:
    """Classifies the Engel coadjoint orbit through ``l = (delta, gamma, beta, alpha)`` on (X_4*, X_3*, X_2*, X_1*)."""
    if l.algebra.family != GroupFamily.ENGEL:
        raise IncompatibleOperandsError("engel_orbit_family needs a functional on the Engel algebra")
    delta, gamma, beta, alpha = l.coeffs
    if delta != 0:
        # the orbit meets gamma = 0 at beta - gamma^2 / (2 delta)
        return EngelOrbit(OrbitKind.CYLINDER, (delta, beta - gamma**2 / (2.0 * delta)))
    if gamma != 0:
        return EngelOrbit(OrbitKind.PLANE, (gamma,))
    return EngelOrbit(OrbitKind.POINT, (alpha, beta))


__all__ = [
    "ball_orbit_measure_closed",
    "ball_orbit_measure_mc",
    "engel_orbit_family",
    "flat_orbit",
    "skew_form",
]
