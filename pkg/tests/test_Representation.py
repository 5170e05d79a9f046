import numpy as np
import pytest
import sympy

from NilSpectra.classes import AlgebraElement, GroupElement, PolyExpFunction
from NilSpectra.classes.PolyExpFunction import symbols_for
from NilSpectra.enums import Chart, GroupFamily
from NilSpectra.exceptions import DegenerateRepresentationError, IncompatibleOperandsError, InvalidChartError
from NilSpectra.helpers.LieAlgebra import build_dynin_folland, build_engel, build_heisenberg
from NilSpectra.helpers.Representation import (
    commutator_residuals,
    dpi_basis,
    dpi_element,
    rep_action,
    representation_nvars,
    verify_commutators,
    verify_homomorphism,
)

TOLERANCE = 1e-9
FAMILIES = [GroupFamily.DYNIN_FOLLAND, GroupFamily.HEISENBERG]


def test_nvars():
    assert representation_nvars(GroupFamily.DYNIN_FOLLAND, 2) == 5
    assert representation_nvars(GroupFamily.HEISENBERG, 2) == 2
    with pytest.raises(IncompatibleOperandsError):
        representation_nvars(GroupFamily.ENGEL, 1)


def test_dynin_folland_basis_images():
    t1, t2, t3 = symbols_for(3)
    phase = 2 * sympy.pi * sympy.I * sympy.Rational(1, 2)
    assert dpi_basis("Z", 0.5, 1).coefficient((0, 0, 0)) == phase
    assert sympy.expand(dpi_basis("Y_2", 0.5, 1).coefficient((0, 0, 0)) - phase * t2) == 0
    assert dpi_basis("X_3", 0.5, 1).coefficient((0, 0, 1)) == 1
    x2 = dpi_basis("X_2", 0.5, 1)
    assert x2.coefficient((0, 1, 0)) == 1
    assert sympy.expand(x2.coefficient((0, 0, 1)) - t1 / 2) == 0


def test_schroedinger_basis_images():
    (t,) = symbols_for(1)
    phase = 2 * sympy.pi * sympy.I * 3
    assert dpi_basis("X_1", 3, 1, GroupFamily.HEISENBERG).coefficient((1,)) == 1
    assert sympy.expand(dpi_basis("X_2", 3, 1, GroupFamily.HEISENBERG).coefficient((0,)) - phase * t) == 0
    assert dpi_basis("X_3", 3, 1, GroupFamily.HEISENBERG).coefficient((0,)) == phase


def test_element_image_is_linear():
    algebra = build_dynin_folland(1)
    a = AlgebraElement.from_terms(algebra, {"X_1": 2, "Y_3": -1})
    expected = dpi_basis("X_1", 1, 1).scale(2) - dpi_basis("Y_3", 1, 1)
    assert dpi_element(a, 1) == expected


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n, rho", [(1, 1), (1, -2), (2, 0.5)])
def test_commutators(family, n, rho):
    assert verify_commutators(rho, n, family=family) <= TOLERANCE


def test_commutator_pairs():
    residuals = commutator_residuals(1, 1)
    algebra = build_dynin_folland(1)
    assert len(residuals) == algebra.dim * (algebra.dim - 1) // 2
    assert ("Z", "Y_1") in residuals


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n, rho", [(1, 1), (1, -2), (2, 0.5)])
def test_homomorphism(family, n, rho):
    assert verify_homomorphism(rho, n, trials=6, seed=3, family=family) <= TOLERANCE


def test_central_character():
    algebra = build_heisenberg(1)
    (t,) = symbols_for(1)
    f = PolyExpFunction(1, 1, -(t**2))
    g = GroupElement(algebra, Chart.EXPONENTIAL, [0.25, 0, 0])
    image = rep_action(g, 1, f)
    points = np.array([[0.0], [0.5], [-1.0]])
    assert np.allclose(image.evaluate(points), 1j * f.evaluate(points))


def test_invalid_representations():
    (t,) = symbols_for(1)
    f = PolyExpFunction(1, 1, -(t**2))
    with pytest.raises(DegenerateRepresentationError):
        dpi_basis("Z", 0, 1)
    with pytest.raises(IncompatibleOperandsError):
        verify_commutators(1, 1, family=GroupFamily.ENGEL)
    df = build_dynin_folland(1)
    with pytest.raises(InvalidChartError):
        rep_action(GroupElement(df, Chart.EXPONENTIAL, [0] * df.dim), 1, f)
    with pytest.raises(IncompatibleOperandsError):
        dpi_element(AlgebraElement.zero(build_engel()), 1)


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
