from __future__ import annotations

import json
from typing import Any, Dict, Optional

from fsspec import AbstractFileSystem
from fsspec.implementations.local import LocalFileSystem

from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..classes.RocklandForm import RocklandForm
from ..exceptions import InvalidParameterError


def _basis_key(value):
    # labels are taken as is, integers are 1-based positions
    if isinstance(value, str):
        return value
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InvalidParameterError(f"basis positions are 1-based integers, got {value!r}", parameter="basis")
    return int(value) - 1


def form_from_dict(algebra: GradedLieAlgebra, doc: Dict[str, Any]) -> RocklandForm:
    """Reads ``{"terms": [{"coeff": c, "sign": +-1, "basis": "X_1" | 1, "power": 2}, ...]}``."""
    terms = doc.get("terms") if isinstance(doc, dict) else None
    if not terms:
        raise InvalidParameterError("a form document needs a non-empty 'terms' list", parameter="terms")
    rows = []
    for entry in terms:
        try:
            rows.append((entry["coeff"], entry.get("sign", 1), _basis_key(entry["basis"]), entry["power"]))
        except (KeyError, TypeError) as e:
            raise InvalidParameterError(f"malformed form term {entry!r}", parameter="terms") from e
    return RocklandForm.from_terms(algebra, rows)


def form_to_dict(form: RocklandForm) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "terms": [
            {
                "coeff": float(term.coefficient),
                "sign": term.sign,
                "basis": form.algebra.labels[term.index],
                "power": term.power,
            }
            for term in form.terms
        ],
        "status": form.status.label,
    }
    if form.nu is not None:
        doc["nu"] = form.nu
        doc["nu0"] = form.nu0
    if form.dilations is not None:
        doc["weights"] = list(form.dilations.weights)
    return doc


def import_form(algebra: GradedLieAlgebra, fp: str, fs: Optional[AbstractFileSystem] = None) -> RocklandForm:
    fs = fs or LocalFileSystem()
    with fs.open(fp, "r") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidParameterError(f"form document is not valid JSON: {e}", parameter="form") from e
    return form_from_dict(algebra, doc)


__all__ = ["form_from_dict", "form_to_dict", "import_form"]
