from __future__ import annotations

import csv
import hashlib
import io
import json
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

import numpy as np
from fsspec import AbstractFileSystem
from fsspec.implementations.local import LocalFileSystem

from ..classes.Estimates import FitResult, rational_dict
from ..classes.Spectrum import SpectrumResult
from ..exceptions import InvalidParameterError

CSV_HEADER = ("index", "eigenvalue", "residual", "converged")


def _default(value):
    if isinstance(value, Fraction):
        return rational_dict(value)
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def canonical_json(data: Any) -> str:
    """Sorted-key compact JSON, the form that is hashed for provenance."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), default=_default)


def config_hash(config: Dict[str, Any]) -> str:
    return hashlib.sha256(canonical_json(config).encode("utf8")).hexdigest()


def provenance(config: Dict[str, Any]) -> Dict[str, Any]:
    from .. import __version__

    return {"version": __version__, "config": config, "config_hash": config_hash(config)}


def render_json(data: Dict[str, Any], config: Optional[Dict[str, Any]] = None) -> str:
    """Pretty, key-sorted JSON of ``data`` with the provenance block attached when a config is given."""
    if config is not None:
        data = dict(data, provenance=provenance(config))
    return json.dumps(data, sort_keys=True, indent=2, default=_default) + "\n"


def write_json(
    data: Dict[str, Any],
    fp: str,
    config: Optional[Dict[str, Any]] = None,
    fs: Optional[AbstractFileSystem] = None,
) -> str:
    text = render_json(data, config)
    fs = fs or LocalFileSystem()
    with fs.open(fp, "w") as f:
        f.write(text)
    return text


###################################################################################
#  EIGENVALUE TABLES  #


def render_eigenvalue_csv(result: SpectrumResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for index, value, residual, flag in result.to_rows():
        writer.writerow((index, repr(value), repr(residual), int(flag)))
    return buffer.getvalue()


def write_eigenvalue_csv(result: SpectrumResult, fp: str, fs: Optional[AbstractFileSystem] = None):
    fs = fs or LocalFileSystem()
    with fs.open(fp, "w") as f:
        f.write(render_eigenvalue_csv(result))


def read_eigenvalue_csv(
    fp: str, fs: Optional[AbstractFileSystem] = None
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns ``(eigenvalues, residuals, converged)`` from a file written by ``write_eigenvalue_csv``.

    Tables with a single ``eigenvalue`` column are accepted as well; their entries count as converged.
    """
    fs = fs or LocalFileSystem()
    try:
        with fs.open(fp, "r") as f:
            rows = list(csv.DictReader(f))
    except FileNotFoundError:
        raise InvalidParameterError(f"eigenvalue table {fp!r} does not exist", parameter="input") from None
    try:
        values = np.array([float(row["eigenvalue"]) for row in rows])
        residuals = np.array([float(row.get("residual") or 0.0) for row in rows])
    except KeyError:
        raise InvalidParameterError(f"eigenvalue table {fp!r} has no eigenvalue column", parameter="input") from None
    except (TypeError, ValueError) as e:
        message = f"eigenvalue table {fp!r} holds a non-numeric entry: {e}"
        raise InvalidParameterError(message, parameter="input") from None
    converged = np.array([row.get("converged", "1") not in ("0", "False", "false") for row in rows], dtype=bool)
    return values, residuals, converged


###################################################################################
#  PLOT DATA  #


def render_plot_data(pairs: np.ndarray, fit: FitResult, hash_: Optional[str] = None) -> str:
    pairs = np.asarray(pairs, dtype=float)
    lines = [
        f"# config_hash {hash_ or 'none'}",
        f"# kind {fit.kind}",
        f"# slope {fit.slope!r}",
        f"# intercept {fit.intercept!r}",
        f"# stderr {fit.stderr!r}",
        f"# window {fit.window[0]}:{fit.window[1]}",
        "# columns log_lambda log_N",
    ]
    positive = pairs[(pairs[:, 0] > 0) & (pairs[:, 1] > 0)]
    for lam, count in positive:
        lines.append(f"{float(np.log(lam))!r} {float(np.log(count))!r}")
    return "\n".join(lines) + "\n"


def emit_plot_data(
    pairs: np.ndarray,
    fit: FitResult,
    fp: str,
    hash_: Optional[str] = None,
    fs: Optional[AbstractFileSystem] = None,
):
    """Writes ``log lam``/``log N`` columns under ``#`` header lines describing the fitted line."""
    fs = fs or LocalFileSystem()
    with fs.open(fp, "w") as f:
        f.write(render_plot_data(pairs, fit, hash_))


def read_plot_data(fp: str, fs: Optional[AbstractFileSystem] = None) -> Tuple[Dict[str, str], np.ndarray]:
    fs = fs or LocalFileSystem()
    header: Dict[str, str] = {}
    rows = []
    with fs.open(fp, "r") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition(" ")
                header[key] = value
            else:
                rows.append([float(v) for v in line.split()])
    return header, np.array(rows, dtype=float).reshape(-1, 2)


__all__ = [
    "canonical_json",
    "config_hash",
    "emit_plot_data",
    "provenance",
    "read_eigenvalue_csv",
    "read_plot_data",
    "render_eigenvalue_csv",
    "render_json",
    "render_plot_data",
    "write_eigenvalue_csv",
    "write_json",
]
