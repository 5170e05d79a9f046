from __future__ import annotations

from functools import lru_cache
from typing import List, Optional

import numpy as np
import sympy

from .. import config
from ..classes.PolyExpFunction import PolyExpFunction, symbols_for


@lru_cache(maxsize=None)
def _sample_points(nvars: int, count: int, box: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng([seed, nvars])
    points = rng.uniform(-box, box, size=(count, nvars))
    points.setflags(write=False)
    return points


def sample_points(nvars: int, count: Optional[int] = None) -> np.ndarray:
    """The fixed evaluation battery in ``[-SAMPLE_BOX, SAMPLE_BOX]^nvars``; identical on every call."""
    if count is None:
        count = config.SAMPLE_POINT_COUNT
    return _sample_points(nvars, count, config.SAMPLE_BOX, config.SAMPLE_SEED)


def relative_residual(left: np.ndarray, right: np.ndarray) -> float:
    """``max |left - right| / max(|left|, |right|)`` with 0 when both sides vanish."""
    left = np.asarray(left)
    right = np.asarray(right)
    scale = max(float(np.max(np.abs(left), initial=0.0)), float(np.max(np.abs(right), initial=0.0)))
    difference = float(np.max(np.abs(left - right), initial=0.0))
    if scale == 0.0:
        return difference
    return difference / scale


def function_battery(nvars: int) -> List[PolyExpFunction]:
    """Test functions mixing real Gaussians, complex phases, and polynomial factors of several degrees."""
    t = symbols_for(nvars)
    first, last = t[0], t[-1]
    square = sum(v**2 for v in t)
    half = sympy.Rational(1, 2)
    return [
        PolyExpFunction(nvars, 1, -square),
        PolyExpFunction(nvars, first, -half * square),
        PolyExpFunction(
            nvars,
            1 + first**2 - 3 * last,
            -square + sympy.I * first - sympy.Rational(1, 4) * first * last,
        ),
        PolyExpFunction(
            nvars,
            last**3 - 2 * first * last + sympy.I / 2,
            -sum(sympy.Rational(k + 2, 2) * v**2 for k, v in enumerate(t)) + sympy.I / 3 * sum(t),
        ),
    ]


__all__ = ["function_battery", "relative_residual", "sample_points"]
