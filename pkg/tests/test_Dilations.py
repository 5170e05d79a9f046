import numpy as np
import pytest

from NilSpectra.classes import DilationFamily, DualVector
from NilSpectra.exceptions import InvalidParameterError, NotAnAutomorphismError
from NilSpectra.helpers.Dilations import (
    anharmonic_h1_weights,
    canonical_dilations,
    df_generator_weights,
    df_weights,
    dilate_dual,
    enumerate_df_weights,
    parse_weights,
    quasi_triangle_bound,
    quasi_triangle_constant,
    quasinorm,
)
from NilSpectra.helpers.LieAlgebra import build_dynin_folland, build_engel, build_heisenberg


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_homogeneous_dimensions(n):
    heisenberg = canonical_dilations(build_heisenberg(n))
    assert (heisenberg.Q, heisenberg.Q_center) == (2 * n + 2, 2)
    df = canonical_dilations(build_dynin_folland(n))
    assert (df.Q, df.Q_center) == (6 * n + 6, 3)


def test_engel_dilations():
    D = canonical_dilations(build_engel())
    assert D.weights == (3, 2, 1, 1)
    assert D.Q == 7


def test_df_weights_from_generators():
    D = df_weights(1, (5, 4, 3))
    # basis order Z, Y_1, Y_2, Y_3, X_3, X_2, X_1
    assert D.weights == (12, 7, 8, 3, 9, 4, 5)
    assert D.Q == 48
    assert D.Q_center == 12
    assert df_generator_weights(D) == (5, 4, 3)


def test_df_weights_triples_repeat_for_larger_n():
    D = df_weights(2, (2, 1, 1))
    assert df_generator_weights(D) == (2, 2, 1, 1, 1)
    assert D.weight_of("Z") == 4


def test_normalization():
    algebra = build_heisenberg(1)
    D = DilationFamily.from_weights(algebra, [4, 2, 2])
    assert D.weights == (2, 1, 1)
    assert D.raw_weights == (4, 2, 2)
    assert D.scale == 2
    assert anharmonic_h1_weights(3, 3).weights == (2, 1, 1)


def test_not_an_automorphism():
    algebra = build_heisenberg(1)
    with pytest.raises(NotAnAutomorphismError) as error:
        parse_weights(algebra, [3, 1, 1])
    assert set(error.value.triple) == {"X_1", "X_2", "X_3"}
    with pytest.raises(InvalidParameterError):
        parse_weights(algebra, [2, 1])
    with pytest.raises(InvalidParameterError):
        parse_weights(algebra, [2, 0, 2])


def test_from_generator():
    algebra = build_heisenberg(1)
    D = DilationFamily.from_generator(algebra, np.diag([2.0, 1.0, 1.0]))
    assert D == canonical_dilations(algebra)
    generator = np.diag([2.0, 1.0, 1.0])
    generator[1, 2] = 1.0
    with pytest.raises(InvalidParameterError):
        DilationFamily.from_generator(algebra, generator)


def test_enumerate_df_weights():
    families = enumerate_df_weights(1, 3)
    # triples in {1, 2, 3}^3 with gcd 1
    assert len(families) == 25
    generators = {df_generator_weights(D) for D in families}
    assert (1, 1, 1) in generators
    assert (2, 2, 2) not in generators
    for D in enumerate_df_weights(2, 2):
        theta = df_generator_weights(D)
        assert theta[0] + theta[2] == theta[1] + theta[3]


def test_quasinorm_and_dilation():
    algebra = build_heisenberg(1)
    D = canonical_dilations(algebra)
    l = DualVector(algebra, [4.0, -3.0, 0.5])
    assert quasinorm(l, D) == pytest.approx(3.0)
    for r in (0.5, 2.0, 7.0):
        assert quasinorm(dilate_dual(l, r, D), D) == pytest.approx(r * quasinorm(l, D))
    with pytest.raises(InvalidParameterError):
        dilate_dual(l, 0.0, D)


@pytest.mark.parametrize("theta", [(1, 1, 1), (5, 4, 3), (1, 2, 3)])
def test_quasi_triangle_constant(theta):
    D = df_weights(1, theta)
    constant = quasi_triangle_constant(D, samples=500, seed=1)
    assert 0 < constant <= quasi_triangle_bound(D)


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
