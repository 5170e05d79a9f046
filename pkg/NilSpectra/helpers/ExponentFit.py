from __future__ import annotations

import math
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from .. import config
from ..classes.Estimates import FitResult
from ..exceptions import InvalidParameterError, TooFewPointsError

MIN_FIT_POINTS = 10

FIT_KINDS = ("counting", "growth")


def counting_pairs(eigenvalues: Sequence[float]) -> np.ndarray:
    """``(lam_s, s)`` rows for a sorted spectrum, s counting from 1 with multiplicity."""
    values = np.sort(np.asarray(eigenvalues, dtype=float))
    return np.column_stack([values, np.arange(1, len(values) + 1, dtype=float)])


def parse_window(text: Optional[str]) -> Optional[Tuple[int, Optional[int]]]:
    """Reads ``"a:b"`` (either side may be empty) as a half-open index range."""
    if text is None or text == "":
        return None
    start, sep, stop = text.partition(":")
    if not sep:
        raise InvalidParameterError(f"windows are written a:b, got {text!r}", parameter="window")
    try:
        return int(start) if start else 0, int(stop) if stop else None
    except ValueError:
        raise InvalidParameterError(f"windows are written a:b, got {text!r}", parameter="window") from None


def fit_exponent(
    data,
    window: Optional[Tuple[int, Optional[int]]] = None,
    kind: str = "counting",
    converged: Optional[Sequence[bool]] = None,
    drop_fraction: Optional[float] = None,
) -> FitResult:
    """Least-squares slope in log-log coordinates.

    ``data`` is either an ``(m, 2)`` array of ``(lam, N(lam))`` pairs or a 1-D eigenvalue list,
    which is ranked into counting pairs first. ``kind="counting"`` regresses ``log N`` on
    ``log lam``; ``kind="growth"`` regresses ``log lam`` on ``log N`` (the eigenvalue growth
    exponent). Without a window the leading ``drop_fraction`` of the points is skipped. Points
    whose ``converged`` flag is False are excluded before the window is applied.
    """
    if kind not in FIT_KINDS:
        raise InvalidParameterError(f"kind must be one of {', '.join(FIT_KINDS)}, got {kind!r}", parameter="kind")
    data = np.asarray(data, dtype=float)
    if data.ndim == 1:
        # ranks count every eigenvalue; unconverged ones are only dropped from the regression
        pairs = counting_pairs(data)
        if converged is not None:
            pairs = pairs[np.asarray(converged, dtype=bool)[np.argsort(data, kind="stable")]]
    elif data.ndim == 2 and data.shape[1] == 2:
        pairs = data
        if converged is not None:
            pairs = pairs[np.asarray(converged, dtype=bool)]
    else:
        raise InvalidParameterError(f"expected eigenvalues or (lam, N) pairs, got shape {data.shape}", parameter="data")

    total = len(pairs)
    if window is None:
        if drop_fraction is None:
            drop_fraction = config.FIT_DROP_FRACTION
        start, stop = int(math.ceil(drop_fraction * total)), total
    else:
        start, stop = window
        stop = total if stop is None else min(stop, total)
    if start < 0 or (stop is not None and stop < start):
        raise InvalidParameterError(f"invalid window {start}:{stop}", parameter="window")
    selected = pairs[start:stop]
    selected = selected[(selected[:, 0] > 0) & (selected[:, 1] > 0)]
    if len(selected) < MIN_FIT_POINTS:
        raise TooFewPointsError(
            f"at least {MIN_FIT_POINTS} positive points are required in the window, got {len(selected)}",
            count=len(selected),
        )

    x, y = np.log(selected[:, 0]), np.log(selected[:, 1])
    if kind == "growth":
        x, y = y, x
    fit = stats.linregress(x, y)
    return FitResult(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        stderr=float(fit.stderr),
        count=len(selected),
        window=(start, stop),
        kind=kind,
    )


__all__ = ["counting_pairs", "fit_exponent", "parse_window"]
