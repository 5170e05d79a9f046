from fractions import Fraction

import pytest

from NilSpectra.exceptions import ExponentRangeError, InvalidParameterError
from NilSpectra.helpers.Multipliers import as_fraction, engel_sublaplacian_query, make_query, multiplier_bounds

QUERIES = [
    # p, q, Q, nu, heat exponent
    ("4/3", 4, 12, 2, Fraction(-3)),
    (2, 2, 12, 2, Fraction(0)),
    ("3/2", 3, 4, 2, Fraction(-2, 3)),
    (2, 4, 48, 65520, Fraction(-1, 5460)),
]


@pytest.mark.parametrize("p, q, Q, nu, heat", QUERIES)
def test_bounds(p, q, Q, nu, heat):
    result = multiplier_bounds(make_query(p, q, Q, nu))
    assert result.alpha == Fraction(Q, nu)
    assert result.heat_exponent == heat
    assert result.gamma_threshold == -heat
    assert result.sobolev_gap == -heat
    assert result.classical_sobolev_gap == Q * (1 / result.p - 1 / result.q)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dynin_folland_alpha(n):
    result = multiplier_bounds(make_query(2, 2, 6 * n + 6, 2))
    assert result.alpha == 3 * n + 3


def test_monotone_in_q():
    previous = None
    for q in range(2, 12):
        heat = multiplier_bounds(make_query("4/3", q, 12, 2)).heat_exponent
        if previous is not None:
            assert heat < previous
        previous = heat


def test_engel():
    result = engel_sublaplacian_query("3/2", 3)
    assert result.Q == 7
    assert result.gamma_threshold == Fraction(7, 6)
    assert result.to_dict()["gamma_threshold"] == {"num": 7, "den": 6}


@pytest.mark.parametrize("p, q", [(1, 2), (3, 4), ("3/2", "3/2"), (2, 1)])
def test_range(p, q):
    with pytest.raises(ExponentRangeError):
        multiplier_bounds(make_query(p, q, 4, 2))


def test_conversions():
    assert as_fraction(0.75) == Fraction(3, 4)
    assert as_fraction("4/3") == Fraction(4, 3)
    assert as_fraction(1 / 3) == Fraction(1, 3)
    with pytest.raises(InvalidParameterError):
        make_query(2, 2, 0, 2)


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
