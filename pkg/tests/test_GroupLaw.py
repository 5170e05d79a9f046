import numpy as np
import pytest

from NilSpectra.classes import AlgebraElement, GroupElement
from NilSpectra.enums import Chart
from NilSpectra.exceptions import InvalidChartError
from NilSpectra.helpers.GroupLaw import (
    df_group_inverse,
    df_group_multiply,
    exponential_multiply,
    group_identity,
    heisenberg_inverse,
    heisenberg_multiply,
    multiply,
    random_element,
    to_algebra,
    to_group,
)
from NilSpectra.helpers.LieAlgebra import build_dynin_folland, build_engel, build_heisenberg

TOLERANCE = 1e-12


def test_heisenberg_product():
    algebra = build_heisenberg(1)
    # coordinates are listed as (x_3, x_2, x_1)
    g = GroupElement(algebra, Chart.EXPONENTIAL, [0, 0, 1])
    h = GroupElement(algebra, Chart.EXPONENTIAL, [0, 1, 0])
    assert heisenberg_multiply(g, h).coords == (0.5, 1.0, 1.0)
    assert heisenberg_multiply(h, g).coords == (-0.5, 1.0, 1.0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bch_matches_heisenberg_law(n):
    algebra = build_heisenberg(n)
    rng = np.random.default_rng(n)
    for _ in range(50):
        g = random_element(algebra, rng, scale=3.0)
        h = random_element(algebra, rng, scale=3.0)
        assert exponential_multiply(g, h).distance(heisenberg_multiply(g, h)) < 1e-11
        assert heisenberg_multiply(g, heisenberg_inverse(g)).distance(group_identity(algebra)) < TOLERANCE


@pytest.mark.parametrize("n", [1, 2])
def test_dynin_folland_group_axioms(n):
    algebra = build_dynin_folland(n)
    identity = group_identity(algebra, Chart.SPLIT_EXPONENTIAL)
    rng = np.random.default_rng(10 + n)
    for _ in range(50):
        g, h, k = (random_element(algebra, rng, Chart.SPLIT_EXPONENTIAL) for _ in range(3))
        assert df_group_multiply(g, identity).distance(g) < TOLERANCE
        assert df_group_multiply(identity, g).distance(g) < TOLERANCE
        assert df_group_multiply(g, df_group_inverse(g)).distance(identity) < TOLERANCE
        assert df_group_multiply(df_group_inverse(g), g).distance(identity) < TOLERANCE
        left = df_group_multiply(df_group_multiply(g, h), k)
        right = df_group_multiply(g, df_group_multiply(h, k))
        assert left.distance(right) < 1e-11


def test_dynin_folland_central_coordinate():
    algebra = build_dynin_folland(1)
    # (z, y_1, y_2, y_3, x_3, x_2, x_1): x_1 = 1 times y_1 = 1 adds 1 to z
    g = GroupElement(algebra, Chart.SPLIT_EXPONENTIAL, [0, 0, 0, 0, 0, 0, 1])
    h = GroupElement(algebra, Chart.SPLIT_EXPONENTIAL, [0, 1, 0, 0, 0, 0, 0])
    assert df_group_multiply(g, h).coords[0] == 1.0
    assert df_group_multiply(h, g).coords[0] == 0.0


def test_engel_product_is_associative():
    algebra = build_engel()
    rng = np.random.default_rng(3)
    for _ in range(20):
        g, h, k = (random_element(algebra, rng) for _ in range(3))
        left = multiply(multiply(g, h), k)
        right = multiply(g, multiply(h, k))
        assert left.distance(right) < 1e-11


def test_charts():
    heisenberg = build_heisenberg(1)
    with pytest.raises(InvalidChartError):
        GroupElement(heisenberg, Chart.SPLIT_EXPONENTIAL, [0, 0, 0])
    df = build_dynin_folland(1)
    g = group_identity(df, Chart.EXPONENTIAL)
    h = group_identity(df, Chart.SPLIT_EXPONENTIAL)
    with pytest.raises(InvalidChartError):
        multiply(g, h)
    with pytest.raises(InvalidChartError):
        to_algebra(h)
    a = AlgebraElement(heisenberg, [1, 2, 3])
    assert to_algebra(to_group(a)) == a


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
