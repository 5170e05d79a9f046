import json
import os
from tempfile import TemporaryDirectory

import pytest

from NilSpectra.enums import GroupFamily
from NilSpectra.exceptions import AlgebraDocumentError
from NilSpectra.export.AlgebraDocument import algebra_from_dict, algebra_to_dict, export_algebra, import_algebra
from NilSpectra.export.FormDocument import form_from_dict, form_to_dict, import_form
from NilSpectra.helpers.Dilations import df_weights
from NilSpectra.helpers.LieAlgebra import build_dynin_folland, build_engel, build_heisenberg
from NilSpectra.helpers.RocklandForms import sub_laplacian_form, validate_rockland_classical

# [e1, e2] = e3, [e2, e3] = e4, [e1, e4] = e5 breaks the Jacobi identity on (e1, e2, e3)
BROKEN = {
    "dim": 5,
    "labels": ["e1", "e2", "e3", "e4", "e5"],
    "step": 4,
    "strata": [1, 1, 2, 3, 5],
    "brackets": [
        {"i": 1, "j": 2, "k": 3, "num": 1, "den": 1},
        {"i": 2, "j": 3, "k": 4, "num": 1, "den": 1},
        {"i": 1, "j": 4, "k": 5, "num": 1, "den": 1},
    ],
}


@pytest.mark.parametrize("algebra", [build_heisenberg(3), build_dynin_folland(2), build_engel()])
def test_round_trip(algebra):
    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "algebra.json")
    export_algebra(algebra, fp)
    imported, D = import_algebra(fp)
    temp_dir.cleanup()
    assert imported == algebra
    assert D is None


def test_weights_round_trip():
    D = df_weights(1, (5, 4, 3))
    doc = algebra_to_dict(D.algebra, D)
    assert doc["family"] == "dynin-folland"
    assert doc["weights"] == [12, 7, 8, 3, 9, 4, 5]
    algebra, imported = algebra_from_dict(json.loads(json.dumps(doc)))
    assert algebra.family == GroupFamily.DYNIN_FOLLAND
    assert imported == D


def test_brackets_are_one_based():
    doc = algebra_to_dict(build_heisenberg(1))
    # labels X_3, X_2, X_1 and [X_2, X_1] = -X_3
    assert doc["brackets"] == [{"i": 2, "j": 3, "k": 1, "num": -1, "den": 1}]
    flipped = dict(doc, brackets=[{"i": 3, "j": 2, "k": 1, "num": 1, "den": 1}])
    assert algebra_from_dict(flipped)[0] == build_heisenberg(1)


def test_all_violations_are_reported():
    with pytest.raises(AlgebraDocumentError) as error:
        algebra_from_dict(BROKEN)
    violations = error.value.violations
    assert any("Jacobi" in v for v in violations)
    assert any("stratum" in v for v in violations)
    assert error.value.to_dict()["violations"] == violations


def test_malformed_documents():
    with pytest.raises(AlgebraDocumentError) as error:
        algebra_from_dict({"dim": 2})
    assert len(error.value.violations) == 4

    doc = algebra_to_dict(build_heisenberg(1))
    with pytest.raises(AlgebraDocumentError) as error:
        algebra_from_dict(dict(doc, step=3))
    assert "step" in error.value.violations[0]

    bad = dict(doc, dim=4, brackets=[{"i": 1, "j": 9, "k": 1, "num": 1}, {"i": 1, "j": 1, "k": 2, "num": 1}])
    with pytest.raises(AlgebraDocumentError) as error:
        algebra_from_dict(bad)
    assert len(error.value.violations) == 3

    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "broken.json")
    with open(fp, "w") as f:
        f.write("{not json")
    with pytest.raises(AlgebraDocumentError):
        import_algebra(fp)
    temp_dir.cleanup()


def test_form_documents():
    algebra = build_dynin_folland(1)
    doc = {
        "terms": [
            {"coeff": 1, "sign": -1, "basis": "X_1", "power": 2},
            {"coeff": 1, "sign": -1, "basis": "X_2", "power": 2},
            {"coeff": 1, "sign": -1, "basis": 4, "power": 2},
        ]
    }
    form = validate_rockland_classical(form_from_dict(algebra, doc))
    expected = sub_laplacian_form(algebra)
    assert sorted(form.basis_indices) == sorted(expected.basis_indices)
    assert form_to_dict(form)["status"] == "verified-classical"
    assert form_to_dict(form)["nu"] == 2

    temp_dir = TemporaryDirectory(prefix="nilspectra_test")
    fp = os.path.join(temp_dir.name, "form.json")
    with open(fp, "w") as f:
        json.dump(form_to_dict(form), f)
    again = import_form(algebra, fp)
    temp_dir.cleanup()
    assert again.basis_indices == form.basis_indices


if __name__ == "__main__":
    for x in list(locals()):
        if str(x)[:4] == "test":
            locals()[x]()
