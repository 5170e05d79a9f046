import numpy as np
import pytest

from NilSpectra.exceptions import InvalidParameterError, TooFewPointsError
from NilSpectra.helpers.ExponentFit import counting_pairs, fit_exponent, parse_window

EXPONENT = 4.5
# lam_s = s^(1 / EXPONENT), so N(lam) = lam^EXPONENT exactly at every eigenvalue
SPECTRUM = np.arange(1, 201, dtype=float) ** (1 / EXPONENT)


def test_counting_pairs():
    pairs = counting_pairs([3.0, 1.0, 2.0])
    assert pairs.tolist() == [[1.0, 1.0], [2.0, 2.0], [3.0, 3.0]]


def test_counting_fit():
    fit = fit_exponent(SPECTRUM)
    assert fit.slope == pytest.approx(EXPONENT, abs=1e-10)
    assert fit.intercept == pytest.approx(0.0, abs=1e-9)
    assert fit.window == (20, 200)
    assert fit.count == 180


def test_growth_fit():
    fit = fit_exponent(SPECTRUM, kind="growth")
    assert fit.slope == pytest.approx(1 / EXPONENT, abs=1e-10)
    assert fit.kind == "growth"


def test_order_does_not_matter():
    shuffled = np.random.default_rng(0).permutation(SPECTRUM)
    assert fit_exponent(shuffled).slope == pytest.approx(EXPONENT, abs=1e-10)


def test_unconverged_entries_keep_ranks():
    converged = np.ones(len(SPECTRUM), dtype=bool)
    converged[::7] = False
    fit = fit_exponent(SPECTRUM, converged=converged)
    assert fit.slope == pytest.approx(EXPONENT, abs=1e-10)
    assert fit.count < 180


def test_pairs_input_and_window():
    pairs = np.column_stack([SPECTRUM, np.arange(1, 201)])
    fit = fit_exponent(pairs, window=(0, 50))
    assert fit.window == (0, 50)
    assert fit.count == 50
    assert fit.slope == pytest.approx(EXPONENT, abs=1e-10)


def test_too_few_points():
    with pytest.raises(TooFewPointsError) as error:
        fit_exponent(SPECTRUM, window=(0, 5))
    assert error.value.count == 5
    with pytest.raises(InvalidParameterError):
        fit_exponent(SPECTRUM, kind="slope")
    with pytest.raises(InvalidParameterError):
        fit_exponent(np.zeros((4, 3)))


@pytest.mark.parametrize(
    "text, window",
    [("", None), (None, None), ("5:", (5, None)), ("2:40", (2, 40)), (":30", (0, 30))],
)
def test_parse_window(text, window):
    assert parse_window(text) == window


@pytest.mark.parametrize("text", ["5", "a:b", "1:2:3"])
def test_parse_window_errors(text):
    with pytest.raises(InvalidParameterError):
        parse_window(text)


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
