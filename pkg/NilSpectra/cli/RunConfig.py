from __future__ import annotations

import json
from typing import Any, Dict, Optional, Tuple

from attrs import asdict, define, fields
from fsspec import AbstractFileSystem
from fsspec.implementations.local import LocalFileSystem

from ..exceptions import InvalidParameterError
from ..export.ResultWriter import config_hash

# presentation-only settings, left out of the provenance block
UNHASHED = ("output", "verbose")


def _int_tuple(value) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    if isinstance(value, str):
        value = [part for part in value.replace(" ", "").split(",") if part]
    elif isinstance(value, (int, float)):
        value = [value]
    try:
        return tuple(int(v) for v in value)
    except (TypeError, ValueError):
        raise InvalidParameterError(f"expected a comma separated list of integers, got {value!r}") from None


@define(frozen=True, slots=True)
class RunConfig:
    """Everything a command needs; flags and the optional JSON config file merge into one of these.

    ``None`` marks settings that a command resolves on its own (the default grid size depends on
    the problem, ``verify`` runs every family when no group is given, and so on).
    """

    command: str
    group: Optional[str] = None
    n: int = 1
    weights: Optional[Tuple[int, ...]] = None
    algebra: Optional[str] = None
    form: Optional[str] = None
    rho: Optional[float] = None
    problem: str = "euclid1d"
    theta1: int = 1
    theta2: int = 1
    N: Optional[Tuple[int, ...]] = None
    L: Optional[float] = None
    k: int = 20
    tol: Optional[float] = None
    method: str = "auto"
    seed: int = 0
    samples: int = 1_000_000
    trials: int = 50
    lam: Optional[float] = None
    mc: bool = False
    input: Optional[str] = None
    window: Optional[str] = None
    kind: str = "counting"
    nu: Optional[int] = None
    Q: Optional[int] = None
    Q_center: Optional[int] = None
    d_pi: Optional[float] = None
    p: Optional[str] = None
    q: Optional[str] = None
    max_weight: int = 3
    output: Optional[str] = None
    verbose: bool = False

    @classmethod
    def field_names(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> RunConfig:
        names = set(cls.field_names())
        unknown = sorted(set(data) - names)
        if unknown:
            raise InvalidParameterError(f"unknown config keys: {', '.join(unknown)}", parameter="config")
        values = {key: value for key, value in data.items() if value is not None}
        for key in ("weights", "N"):
            if key in values:
                values[key] = _int_tuple(values[key])
        for key in ("p", "q"):
            if key in values:
                values[key] = str(values[key])
        if "command" not in values:
            raise InvalidParameterError("no command given", parameter="command")
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for key in UNHASHED:
            data.pop(key)
        return data

    @property
    def hash(self) -> str:
        return config_hash(self.to_dict())


def load_config_file(fp: str, fs: Optional[AbstractFileSystem] = None) -> Dict[str, Any]:
    fs = fs or LocalFileSystem()
    try:
        with fs.open(fp, "r") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise InvalidParameterError(f"config file {fp!r} does not exist", parameter="config") from None
    except json.JSONDecodeError as e:
        raise InvalidParameterError(f"config file {fp!r} is not valid JSON: {e}", parameter="config") from None
    if not isinstance(data, dict):
        raise InvalidParameterError("the config file must hold a JSON object", parameter="config")
    return data


def merge_config(command: str, flags: Dict[str, Any], file_values: Optional[Dict[str, Any]] = None) -> RunConfig:
    """File values first, explicitly given flags (anything not None) on top."""
    merged: Dict[str, Any] = dict(file_values or {})
    merged.pop("command", None)
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["command"] = command
    return RunConfig.from_dict(merged)


__all__ = ["RunConfig", "load_config_file", "merge_config"]
