from __future__ import annotations

import warnings
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from attrs import define, field

from ..classes.Elements import GroupElement
from ..enums import Chart, GroupFamily
from ..exceptions import InvalidParameterError, QuasiTriangleWarning
from ..helpers.Dilations import (
    canonical_dilations,
    df_weights,
    enumerate_df_weights,
    quasi_triangle_bound,
    quasi_triangle_constant,
)
from ..helpers.GroupLaw import (
    df_group_inverse,
    df_group_multiply,
    exponential_multiply,
    group_identity,
    heisenberg_multiply,
    random_element,
)
from ..helpers.LieAlgebra import (
    build_dynin_folland,
    build_engel,
    build_heisenberg,
    gradation_violations,
    jacobi_residual,
)
from ..helpers.Representation import verify_commutators, verify_homomorphism

GROUP_LAW_TOLERANCE = 1e-12
REPRESENTATION_TOLERANCE = 1e-9
DEFAULT_RHOS = (1, -2, 0.5)


@define(frozen=True, slots=True)
class SuiteResult:
    name: str
    passed: bool
    residual: float
    tolerance: float
    details: Dict[str, Any] = field(factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "details": self.details,
        }


def _algebras(ns: Sequence[int]):
    for n in ns:
        yield f"H_{n}", build_heisenberg(n)
        yield f"H_{n},2", build_dynin_folland(n)
    yield "Engel", build_engel()


def _relative_distance(g: GroupElement, h: GroupElement) -> float:
    scale = max(1.0, float(np.max(np.abs(g.as_array()))), float(np.max(np.abs(h.as_array()))))
    return g.distance(h) / scale


def jacobi_suite(ns: Sequence[int] = (1, 2, 3, 4)) -> SuiteResult:
    """Exact Jacobi identity and gradation compatibility of every built-in algebra."""
    details = {}
    worst = 0.0
    passed = True
    for name, algebra in _algebras(ns):
        residual = jacobi_residual(algebra)
        violations = gradation_violations(algebra)
        details[name] = {"jacobi_residual": str(residual), "gradation_violations": len(violations)}
        worst = max(worst, float(residual))
        passed = passed and residual == 0 and not violations
    return SuiteResult("jacobi", passed, worst, 0.0, details)


def dilations_suite(ns: Sequence[int] = (1,), max_weight: int = 3, samples: int = 1000, seed: int = 0) -> SuiteResult:
    """Canonical dilations, the enumerated Dynin-Folland weight families and the quasi-triangle constants.

    The observed quasi-triangle constants are reported through ``QuasiTriangleWarning``.
    """
    details: Dict[str, Any] = {}
    passed = True
    worst = 0.0
    for name, algebra in _algebras(ns):
        D = canonical_dilations(algebra)
        details[name] = {"Q": D.Q, "Q_center": D.Q_center}
    for n in ns:
        expected = {"H_{n}": 2 * n + 2, "H_{n},2": 6 * n + 6}
        for key, Q in expected.items():
            label = key.format(n=n)
            passed = passed and details[label]["Q"] == Q
        families = enumerate_df_weights(n, max_weight)
        details[f"H_{n},2"]["weight_families"] = len(families)
        for D in (canonical_dilations(build_dynin_folland(n)), df_weights(n, (5, 4, 3))):
            constant = quasi_triangle_constant(D, samples, seed)
            bound = quasi_triangle_bound(D)
            ratio = constant / bound
            worst = max(worst, ratio)
            passed = passed and constant <= bound
            details[f"H_{n},2"][f"quasi_triangle{list(D.weights)}"] = {"constant": constant, "bound": bound}
            warnings.warn(
                f"H_{n},2 weights {list(D.weights)}: empirical quasi-triangle constant "
                f"{constant:.4f} (bound {bound:g})",
                QuasiTriangleWarning,
                stacklevel=2,
            )
    return SuiteResult("dilations", passed, worst, 1.0, details)


def bch_suite(ns: Sequence[int] = (1, 2), pairs: int = 100, seed: int = 0, scale: float = 5.0) -> SuiteResult:
    """BCH product against the explicit Heisenberg law, and the split Dynin-Folland law's group axioms."""
    rng = np.random.default_rng(seed)
    details: Dict[str, Any] = {}
    for n in ns:
        heisenberg = build_heisenberg(n)
        bch_defect = 0.0
        for _ in range(pairs):
            g = random_element(heisenberg, rng, Chart.EXPONENTIAL, scale)
            h = random_element(heisenberg, rng, Chart.EXPONENTIAL, scale)
            bch_defect = max(bch_defect, _relative_distance(exponential_multiply(g, h), heisenberg_multiply(g, h)))

        df = build_dynin_folland(n)
        identity = group_identity(df, Chart.SPLIT_EXPONENTIAL)
        axioms = {"identity": 0.0, "inverse": 0.0, "associativity": 0.0}
        for _ in range(pairs):
            g, h, k = (random_element(df, rng, Chart.SPLIT_EXPONENTIAL, scale) for _ in range(3))
            axioms["identity"] = max(
                axioms["identity"],
                _relative_distance(df_group_multiply(g, identity), g),
                _relative_distance(df_group_multiply(identity, g), g),
            )
            axioms["inverse"] = max(
                axioms["inverse"],
                _relative_distance(df_group_multiply(g, df_group_inverse(g)), identity),
                _relative_distance(df_group_multiply(df_group_inverse(g), g), identity),
            )
            axioms["associativity"] = max(
                axioms["associativity"],
                _relative_distance(
                    df_group_multiply(df_group_multiply(g, h), k), df_group_multiply(g, df_group_multiply(h, k))
                ),
            )
        details[f"n={n}"] = {"bch_vs_heisenberg": bch_defect, **axioms}
    worst = max(max(entry.values()) for entry in details.values())
    return SuiteResult("bch", worst <= GROUP_LAW_TOLERANCE, worst, GROUP_LAW_TOLERANCE, details)


def _family_label(family: GroupFamily) -> str:
    return "df" if family == GroupFamily.DYNIN_FOLLAND else "heisenberg"


def commutators_suite(
    ns: Sequence[int] = (1, 2),
    rhos: Sequence[float] = DEFAULT_RHOS,
    families: Sequence[GroupFamily] = (GroupFamily.DYNIN_FOLLAND, GroupFamily.HEISENBERG),
) -> SuiteResult:
    """``[dpi(V), dpi(W)] = dpi([V, W])`` for every basis pair."""
    details = {}
    for family in families:
        for n in ns:
            for rho in rhos:
                details[f"{_family_label(family)} n={n} rho={rho:g}"] = verify_commutators(rho, n, family=family)
    worst = max(details.values())
    return SuiteResult("commutators", worst <= REPRESENTATION_TOLERANCE, worst, REPRESENTATION_TOLERANCE, details)


def rep_suite(
    ns: Sequence[int] = (1, 2),
    rhos: Sequence[float] = DEFAULT_RHOS,
    trials: int = 50,
    seed: int = 0,
    families: Sequence[GroupFamily] = (GroupFamily.DYNIN_FOLLAND, GroupFamily.HEISENBERG),
) -> SuiteResult:
    """``pi(g) pi(h) f = pi(gh) f`` on random pairs and test functions."""
    details = {}
    for family in families:
        for n in ns:
            for rho in rhos:
                details[f"{_family_label(family)} n={n} rho={rho:g}"] = verify_homomorphism(
                    rho, n, trials=trials, seed=seed, family=family
                )
    worst = max(details.values())
    return SuiteResult("rep", worst <= REPRESENTATION_TOLERANCE, worst, REPRESENTATION_TOLERANCE, details)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "jacobi": jacobi_suite,
    "dilations": dilations_suite,
    "bch": bch_suite,
    "commutators": commutators_suite,
    "rep": rep_suite,
}


def run_suites(
    name: str,
    ns: Optional[Sequence[int]] = None,
    rhos: Optional[Sequence[float]] = None,
    trials: int = 50,
    seed: int = 0,
    families: Optional[Sequence[GroupFamily]] = None,
) -> List[SuiteResult]:
    """Runs one suite by name, or every suite for ``"all"``."""
    if name != "all" and name not in SUITES:
        raise InvalidParameterError(
            f"unknown suite {name!r}, expected one of all, {', '.join(SUITES)}", parameter="suite"
        )
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        kwargs: Dict[str, Any] = {}
        if ns is not None:
            kwargs["ns"] = ns
        if suite in ("commutators", "rep"):
            if rhos is not None:
                kwargs["rhos"] = rhos
            if families is not None:
                kwargs["families"] = families
        if suite == "rep":
            kwargs.update(trials=trials, seed=seed)
        elif suite in ("dilations", "bch"):
            kwargs["seed"] = seed
        results.append(SUITES[suite](**kwargs))
    return results


__all__ = [
    "SuiteResult",
    "bch_suite",
    "commutators_suite",
    "dilations_suite",
    "jacobi_suite",
    "rep_suite",
    "run_suites",
]
