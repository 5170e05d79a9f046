import json
import os
from fractions import Fraction
from tempfile import TemporaryDirectory

import numpy as np
import pytest

import NilSpectra
from NilSpectra.classes import GridSpec, SpectrumResult
from NilSpectra.exceptions import InvalidParameterError
from NilSpectra.export.ResultWriter import (
    config_hash,
    emit_plot_data,
    read_eigenvalue_csv,
    read_plot_data,
    render_json,
    write_eigenvalue_csv,
    write_json,
)
from NilSpectra.helpers.ExponentFit import counting_pairs, fit_exponent

SPECTRUM = np.arange(1, 101, dtype=float) ** 0.5


def make_result() -> SpectrumResult:
    return SpectrumResult(
        eigenvalues=np.array([1.0, 2.5, 1 / 3]),
        residuals=np.array([1e-12, 2e-11, 0.5]),
        converged=np.array([True, True, False]),
        grid=GridSpec(1, 6.0, 16),
        method="dense",
        tolerance=1e-10,
        provenance={"problem": "euclid1d"},
    )


def test_eigenvalue_csv():
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "eigenvalues.csv")
    write_eigenvalue_csv(make_result(), fp)
    with open(fp) as f:
        header = f.readline().strip()
    values, residuals, converged = read_eigenvalue_csv(fp)
    temp_dir.cleanup()
    assert header == "index,eigenvalue,residual,converged"
    # repr keeps every digit
    assert values.tolist() == [1.0, 2.5, 1 / 3]
    assert residuals.tolist() == [1e-12, 2e-11, 0.5]
    assert converged.tolist() == [True, True, False]


def test_single_column_csv():
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "values.csv")
    with open(fp, "w") as f:
        f.write("eigenvalue\n1.5\n2.5\n")
    values, residuals, converged = read_eigenvalue_csv(fp)
    temp_dir.cleanup()
    assert values.tolist() == [1.5, 2.5]
    assert residuals.tolist() == [0.0, 0.0]
    assert converged.all()


@pytest.mark.parametrize(
    "table",
    [
        "index,value\n0,1.5\n",
        "eigenvalue\n1.5\nabc\n",
        "eigenvalue,residual\n1.5,x\n",
    ],
)
def test_malformed_eigenvalue_csv(table):
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "values.csv")
    with open(fp, "w") as f:
        f.write(table)
    with pytest.raises(InvalidParameterError) as error:
        read_eigenvalue_csv(fp)
    with pytest.raises(InvalidParameterError):
        read_eigenvalue_csv(os.path.join(temp_dir.name, "missing.csv"))
    temp_dir.cleanup()
    assert error.value.parameter == "input"


def test_plot_data():
    fit = fit_exponent(SPECTRUM)
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "fit_plot.dat")
    emit_plot_data(counting_pairs(SPECTRUM), fit, fp, hash_="abc")
    header, rows = read_plot_data(fp)
    temp_dir.cleanup()
    assert header["config_hash"] == "abc"
    assert header["kind"] == "counting"
    assert float(header["slope"]) == fit.slope
    assert header["window"] == "10:100"
    assert rows.shape == (100, 2)
    assert rows[-1] == pytest.approx([np.log(10.0), np.log(100.0)])


def test_json_provenance():
    config = {"command": "count predict", "nu": 2, "n": 1}
    text = render_json({"value": Fraction(9, 2), "array": np.arange(3)}, config)
    data = json.loads(text)
    assert text.endswith("\n")
    assert data["value"] == {"num": 9, "den": 2}
    assert data["array"] == [0, 1, 2]
    assert data["provenance"]["version"] == NilSpectra.__version__
    assert data["provenance"]["config_hash"] == config_hash(config)
    assert config_hash(config) == config_hash({"n": 1, "nu": 2, "command": "count predict"})
    assert config_hash(config) != config_hash(dict(config, nu=4))


def test_write_json():
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "out.json")
    text = write_json({"a": (1, 2)}, fp)
    with open(fp) as f:
        stored = f.read()
    temp_dir.cleanup()
    assert stored == text
    assert json.loads(stored) == {"a": [1, 2]}


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
