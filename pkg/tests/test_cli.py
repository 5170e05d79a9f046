import json
import os
from tempfile import TemporaryDirectory

import numpy as np
import pytest

from NilSpectra.cli import main
from NilSpectra.cli.RunConfig import RunConfig, merge_config
from NilSpectra.exceptions import InvalidParameterError

COUNT_PREDICT = ["count", "predict", "--group", "df", "--n", "1", "--nu", "2"]


def run(capsys, argv):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_count_predict(capsys):
    status, out, _ = run(capsys, COUNT_PREDICT)
    data = json.loads(out)
    assert status == 0
    assert data["lambda_exponent"] == {"num": 9, "den": 2}
    assert data["rho_power"] == {"num": -3, "den": 1}
    assert data["eigengrowth"] == {"s_exponent": {"num": 2, "den": 9}, "rho_power": {"num": 2, "den": 3}}
    assert data["provenance"]["config"]["command"] == "count predict"


def test_generic_prediction(capsys):
    status, out, _ = run(
        capsys,
        ["count", "predict", "--group", "siz-generic", "--nu", "2", "--Q", "8", "--Q-center", "2", "--d-pi", "2"],
    )
    assert status == 0
    assert json.loads(out)["lambda_exponent"] == {"num": 3, "den": 1}


def test_multiplier(capsys):
    status, out, _ = run(capsys, ["multiplier", "--group", "df", "--n", "1", "--p", "4/3", "--q", "4", "--nu", "2"])
    data = json.loads(out)
    assert status == 0
    assert data["Q"] == 12
    assert data["heat_exponent"] == {"num": -3, "den": 1}


def test_usage_errors(capsys):
    status, _, err = run(capsys, [])
    assert status == 2
    assert json.loads(err.strip().splitlines()[-1])["error"] == "usage"

    with pytest.raises(SystemExit) as error:
        main(["spectrum", "solve", "--problem", "nope"])
    assert error.value.code == 2
    capsys.readouterr()

    status, _, err = run(capsys, ["algebra", "info", "--group", "nope"])
    assert status == 2
    assert json.loads(err)["error"] == "invalid-parameter"

    status, _, err = run(capsys, ["multiplier", "--group", "df", "--p", "3", "--q", "4", "--nu", "2"])
    assert status == 2
    assert json.loads(err)["error"] == "out-of-range"


def test_config_file(capsys):
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "config.json")
    with open(fp, "w") as f:
        json.dump({"group": "df", "n": 1, "nu": 2}, f)
    status, out, _ = run(capsys, ["count", "predict", "--config", fp])
    assert status == 0
    assert json.loads(out)["lambda_exponent"] == {"num": 9, "den": 2}
    # flags win over the file
    status, out, _ = run(capsys, ["count", "predict", "--config", fp, "--nu", "4"])
    assert json.loads(out)["lambda_exponent"] == {"num": 9, "den": 4}
    with open(fp, "w") as f:
        json.dump({"colour": "blue"}, f)
    status, _, err = run(capsys, ["count", "predict", "--config", fp])
    temp_dir.cleanup()
    assert status == 2
    assert "colour" in err


def test_spectrum_and_fit(capsys):
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    status, out, _ = run(
        capsys, ["spectrum", "solve", "--N", "401", "-k", "40", "--L", "6", "--output", temp_dir.name]
    )
    assert status == 0
    data = json.loads(out)
    assert len(data["eigenvalues"]) == 40
    assert sorted(os.listdir(temp_dir.name)) == ["eigenvalues.csv", "spectrum_solve.json"]

    csv_path = os.path.join(temp_dir.name, "eigenvalues.csv")
    argv = ["fit", "exponent", "--input", csv_path, "--kind", "growth", "--output", temp_dir.name]
    status, out, _ = run(capsys, argv)
    fit = json.loads(out)
    assert status == 0
    # eigenvalues of the harmonic oscillator grow linearly
    assert fit["slope"] == pytest.approx(1.0, abs=0.1)
    assert os.path.exists(os.path.join(temp_dir.name, "fit_plot.dat"))
    with open(os.path.join(temp_dir.name, "fit_plot.dat")) as f:
        assert f.readline().startswith("# config_hash ")
    temp_dir.cleanup()


def test_fit_input_errors(capsys):
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    missing = os.path.join(temp_dir.name, "missing.csv")
    status, _, err = run(capsys, ["fit", "exponent", "--input", missing])
    assert status == 2
    assert json.loads(err)["error"] == "invalid-parameter"

    for name, table in [("no_column.csv", "index,value\n0,1.5\n"), ("text.csv", "eigenvalue\n1.5\nabc\n")]:
        fp = os.path.join(temp_dir.name, name)
        with open(fp, "w") as f:
            f.write(table)
        status, _, err = run(capsys, ["fit", "exponent", "--input", fp])
        assert status == 2
        assert json.loads(err)["error"] == "invalid-parameter"
    temp_dir.cleanup()


def test_verify_command(capsys):
    status, out, _ = run(capsys, ["verify", "jacobi", "--n", "1"])
    data = json.loads(out)
    assert status == 0
    assert data["passed"]
    assert data["suites"][0]["suite"] == "jacobi"


def test_algebra_info(capsys):
    status, out, _ = run(capsys, ["algebra", "info", "--group", "df", "--n", "1", "--weights", "5,4,3"])
    data = json.loads(out)
    assert status == 0
    assert data["Q"] == 48
    assert data["Q_center"] == 12
    assert data["stratified"]
    assert data["algebra"]["weights"] == [12, 7, 8, 3, 9, 4, 5]


def test_run_config():
    config = merge_config("count predict", {"nu": 2, "weights": "1,1,1", "output": "out"}, {"nu": 4, "n": 2})
    assert config.nu == 2
    assert config.n == 2
    assert config.weights == (1, 1, 1)
    assert "output" not in config.to_dict()
    assert config.hash == merge_config("count predict", {"nu": 2, "weights": "1,1,1"}, {"n": 2}).hash
    with pytest.raises(InvalidParameterError):
        RunConfig.from_dict({"nu": 2})
    with pytest.raises(InvalidParameterError):
        merge_config("count predict", {"weights": "1,a"})
    assert np.isclose(RunConfig.from_dict({"command": "x", "rho": 0.5}).rho, 0.5)


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
