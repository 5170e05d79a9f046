"""JSON documents describing a graded Lie algebra.

The layout is::

    {
        "dim": 7,
        "labels": ["X_7", ...],
        "step": 2,
        "strata": [2, 1, ...],
        "brackets": [{"i": 2, "j": 5, "k": 1, "num": 1, "den": 1}, ...],
        "family": "heisenberg",   # optional
        "n": 3,                    # optional
        "weights": [2, 1, ...]     # optional
    }

Bracket indices are 1-based positions in ``labels``; each entry states
``[e_i, e_j] = (num / den) e_k`` with ``i < j``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from fsspec import AbstractFileSystem
from fsspec.implementations.local import LocalFileSystem

from ..classes.DilationFamily import DilationFamily
from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..enums import GroupFamily
from ..exceptions import AlgebraDocumentError, NilSpectraError
from ..helpers.Dilations import parse_weights
from ..helpers.LieAlgebra import gradation_violations, jacobi_residual, nilpotency_step

REQUIRED_KEYS = ("dim", "labels", "step", "strata", "brackets")


def algebra_to_dict(algebra: GradedLieAlgebra, D: Optional[DilationFamily] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "step": algebra.step,
        "strata": list(algebra.strata),
        "brackets": [
            {"i": i + 1, "j": j + 1, "k": k + 1, "num": value.numerator, "den": value.denominator}
            for (i, j, k), value in sorted(algebra.structure_constants.items())
        ],
    }
    if algebra.family != GroupFamily.CUSTOM:
        doc["family"] = algebra.family.name.lower().replace("_", "-")
    if algebra.n is not None:
        doc["n"] = algebra.n
    if D is not None:
        doc["weights"] = list(D.weights)
    return doc


def _read_brackets(doc: Dict[str, Any], dim: int, violations: List[str]) -> Dict[Tuple[int, int, int], Fraction]:
    constants: Dict[Tuple[int, int, int], Fraction] = {}
    for number, entry in enumerate(doc["brackets"]):
        try:
            i, j, k = int(entry["i"]), int(entry["j"]), int(entry["k"])
            value = Fraction(int(entry["num"]), int(entry.get("den", 1)))
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            violations.append(f"bracket entry {number} is malformed: {entry!r}")
            continue
        if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
            violations.append(f"bracket entry {number} has an index outside 1..{dim}")
            continue
        if i == j:
            violations.append(f"bracket entry {number} brackets e_{i} with itself")
            continue
        if i > j:
            i, j, value = j, i, -value
        key = (i - 1, j - 1, k - 1)
        constants[key] = constants.get(key, Fraction(0)) + value
    return constants


def algebra_from_dict(doc: Dict[str, Any]) -> Tuple[GradedLieAlgebra, Optional[DilationFamily]]:
    """Builds and checks an algebra document.

    Every problem found (missing keys, bad indices, a non-zero Jacobi residual, brackets that break
    the gradation, a stored step different from the computed one) is collected and reported
    together in one ``AlgebraDocumentError``.
    """
    violations: List[str] = [f"missing key {key!r}" for key in REQUIRED_KEYS if key not in doc]
    if violations:
        raise AlgebraDocumentError("invalid algebra document", violations)

    labels = list(doc["labels"])
    dim = int(doc["dim"])
    if len(labels) != dim:
        violations.append(f"dim is {dim} but {len(labels)} labels are given")
    if len(doc["strata"]) != len(labels):
        violations.append(f"{len(doc['strata'])} strata given for {len(labels)} labels")
    constants = _read_brackets(doc, len(labels), violations)
    if violations:
        raise AlgebraDocumentError("invalid algebra document", violations)

    try:
        family = GroupFamily.from_name(doc["family"]) if doc.get("family") else GroupFamily.CUSTOM
        algebra = GradedLieAlgebra(
            labels, constants, [int(s) for s in doc["strata"]], int(doc["step"]), family=family, n=doc.get("n")
        )
    except (NilSpectraError, ValueError) as e:
        raise AlgebraDocumentError("invalid algebra document", [str(e)]) from e

    residual = jacobi_residual(algebra)
    if residual != 0:
        violations.append(f"Jacobi identity fails (residual {residual})")
    for i, j, k in gradation_violations(algebra):
        violations.append(
            f"[{labels[i]}, {labels[j]}] has a {labels[k]} component outside stratum "
            f"{algebra.strata[i] + algebra.strata[j]}"
        )
    if not violations:
        try:
            step = nilpotency_step(algebra)
        except NilSpectraError as e:
            violations.append(str(e))
        else:
            if step != algebra.step:
                violations.append(f"stored step {algebra.step} differs from the computed step {step}")
    if violations:
        raise AlgebraDocumentError("invalid algebra document", violations)

    D = None
    if doc.get("weights") is not None:
        D = parse_weights(algebra, [int(w) for w in doc["weights"]])
    return algebra, D


def export_algebra(
    algebra: GradedLieAlgebra,
    fp: str,
    D: Optional[DilationFamily] = None,
    fs: Optional[AbstractFileSystem] = None,
):
    fs = fs or LocalFileSystem()
    with fs.open(fp, "w") as f:
        json.dump(algebra_to_dict(algebra, D), f, indent=2)


def import_algebra(
    fp: str, fs: Optional[AbstractFileSystem] = None
) -> Tuple[GradedLieAlgebra, Optional[DilationFamily]]:
    fs = fs or LocalFileSystem()
    with fs.open(fp, "r") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise AlgebraDocumentError("invalid algebra document", [f"not valid JSON: {e}"]) from e
    return algebra_from_dict(doc)


__all__ = ["algebra_from_dict", "algebra_to_dict", "export_algebra", "import_algebra"]
