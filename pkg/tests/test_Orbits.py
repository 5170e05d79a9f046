import pytest

from NilSpectra.classes import DualVector
from NilSpectra.enums import OrbitKind
from NilSpectra.exceptions import DegenerateOrbitError, InvalidParameterError, UnsupportedAlgebraError
from NilSpectra.helpers.Dilations import canonical_dilations, df_weights
from NilSpectra.helpers.LieAlgebra import build_dynin_folland, build_engel, build_heisenberg
from NilSpectra.helpers.Orbits import (
    ball_orbit_measure_closed,
    ball_orbit_measure_mc,
    engel_orbit_family,
    flat_orbit,
)

MC_SAMPLES = 200_000
MC_TOLERANCE = 0.02


@pytest.mark.parametrize("n, rho", [(1, 1.0), (1, -2.0), (2, 0.5), (3, 3.0)])
def test_flat_orbit_pfaffian(n, rho):
    heisenberg = flat_orbit(build_heisenberg(n), rho)
    assert heisenberg.pfaffian == pytest.approx(abs(rho) ** n)
    assert heisenberg.rho_power == -n
    df = flat_orbit(build_dynin_folland(n), rho)
    assert df.dimension == 4 * n + 2
    assert df.pfaffian == pytest.approx(abs(rho) ** (2 * n + 1))
    assert df.rho_power == -(2 * n + 1)


def test_closed_form_heisenberg():
    algebra = build_heisenberg(1)
    D = canonical_dilations(algebra)
    measure = ball_orbit_measure_closed(flat_orbit(algebra, 1.0), 2.0, D)
    assert measure.value == pytest.approx(16.0)
    assert measure.prefactor == pytest.approx(4.0)
    assert measure.lambda_power == 2
    assert not measure.below_threshold


def test_closed_form_dynin_folland():
    algebra = build_dynin_folland(1)
    D = canonical_dilations(algebra)
    measure = ball_orbit_measure_closed(flat_orbit(algebra, 1.0), 2.0, D)
    assert measure.value == pytest.approx(2.0**6 * 2.0**9)
    assert measure.lambda_power == D.Q - D.Q_center == 9


def test_threshold():
    algebra = build_heisenberg(1)
    D = canonical_dilations(algebra)
    measure = ball_orbit_measure_closed(flat_orbit(algebra, 1.0), 0.5, D)
    assert measure.below_threshold
    assert measure.value == 0.0
    # |rho|^(1/2) = 2 is exactly the radius
    assert ball_orbit_measure_closed(flat_orbit(algebra, 4.0), 2.0, D).value > 0


@pytest.mark.parametrize(
    "algebra, D, rho, lam",
    [
        (build_heisenberg(1), canonical_dilations(build_heisenberg(1)), 1.0, 2.0),
        (build_dynin_folland(1), canonical_dilations(build_dynin_folland(1)), -1.5, 1.7),
        (build_dynin_folland(1), df_weights(1, (2, 1, 1)), 2.0, 1.5),
    ],
)
def test_monte_carlo_matches_closed_form(algebra, D, rho, lam):
    orbit = flat_orbit(algebra, rho)
    closed = ball_orbit_measure_closed(orbit, lam, D)
    estimate = ball_orbit_measure_mc(orbit, lam, D, MC_SAMPLES, seed=7)
    assert abs(estimate.estimate - closed.value) <= MC_TOLERANCE * closed.value
    again = ball_orbit_measure_mc(orbit, lam, D, MC_SAMPLES, seed=7, workers=1)
    assert again.hits == estimate.hits


@pytest.mark.parametrize(
    "algebra, D, rho, lam",
    [
        (build_dynin_folland(1), canonical_dilations(build_dynin_folland(1)), 1.0, 2.0),
        (build_dynin_folland(1), df_weights(1, (5, 4, 3)), 1.5, 1.7),
        (build_heisenberg(1), canonical_dilations(build_heisenberg(1)), 1.0, 3.0),
    ],
)
def test_monte_carlo_million_samples(algebra, D, rho, lam):
    orbit = flat_orbit(algebra, rho)
    closed = ball_orbit_measure_closed(orbit, lam, D)
    estimate = ball_orbit_measure_mc(orbit, lam, D, 1_000_000, seed=42)
    assert not closed.below_threshold
    assert abs(estimate.estimate - closed.value) <= MC_TOLERANCE * closed.value


@pytest.mark.parametrize(
    "algebra, D, rho",
    [
        (build_heisenberg(1), canonical_dilations(build_heisenberg(1)), 1.0),
        (build_dynin_folland(1), canonical_dilations(build_dynin_folland(1)), 1.0),
        (build_dynin_folland(1), df_weights(1, (5, 4, 3)), 1.5),
        (build_dynin_folland(2), canonical_dilations(build_dynin_folland(2)), -0.5),
    ],
)
def test_closed_form_lambda_scaling(algebra, D, rho):
    orbit = flat_orbit(algebra, rho)
    small = ball_orbit_measure_closed(orbit, 1.7, D)
    large = ball_orbit_measure_closed(orbit, 3.4, D)
    assert large.value / small.value == pytest.approx(2.0 ** (D.Q - D.Q_center), rel=1e-12)
    assert small.lambda_power == D.Q - D.Q_center


def test_threshold_with_weights():
    D = df_weights(1, (5, 4, 3))
    orbit = flat_orbit(D.algebra, 1.5)
    # 1.5^(1/12) is about 1.034
    assert ball_orbit_measure_closed(orbit, 1.0, D).value == 0.0
    assert ball_orbit_measure_closed(orbit, 1.05, D).value > 0.0


def test_monte_carlo_arguments():
    algebra = build_heisenberg(1)
    orbit = flat_orbit(algebra, 1.0)
    D = canonical_dilations(algebra)
    with pytest.raises(InvalidParameterError):
        ball_orbit_measure_mc(orbit, 2.0, D, 1000, seed=0)
    with pytest.raises(InvalidParameterError):
        ball_orbit_measure_mc(orbit, 2.0, D, MC_SAMPLES, seed=-1)
    with pytest.raises(InvalidParameterError):
        ball_orbit_measure_mc(orbit, -1.0, D, MC_SAMPLES, seed=0)


def test_degenerate_orbits():
    with pytest.raises(DegenerateOrbitError):
        flat_orbit(build_heisenberg(1), 0.0)
    with pytest.raises(UnsupportedAlgebraError):
        flat_orbit(build_engel(), 1.0)


@pytest.mark.parametrize(
    "coeffs, kind, parameters",
    [
        ((1.0, 2.0, 3.0, 4.0), OrbitKind.CYLINDER, (1.0, 1.0)),
        ((-2.0, 2.0, 0.0, 4.0), OrbitKind.CYLINDER, (-2.0, 1.0)),
        ((0.0, 2.0, 3.0, 4.0), OrbitKind.PLANE, (2.0,)),
        ((0.0, 0.0, 3.0, 4.0), OrbitKind.POINT, (4.0, 3.0)),
    ],
)
def test_engel_orbits(coeffs, kind, parameters):
    orbit = engel_orbit_family(DualVector(build_engel(), coeffs))
    assert orbit.kind == kind
    assert orbit.parameters == pytest.approx(parameters)
    assert orbit.dimension == (0 if kind == OrbitKind.POINT else 2)


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
