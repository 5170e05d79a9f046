from __future__ import annotations

from typing import Any, Callable, Dict, Optional, Tuple

from attrs import define, field

from ..classes.DilationFamily import DilationFamily
from ..classes.GradedLieAlgebra import GradedLieAlgebra
from ..classes.RocklandForm import RocklandForm
from ..enums import GroupFamily, Problem
from ..exceptions import InvalidParameterError
from ..export.AlgebraDocument import algebra_to_dict, import_algebra
from ..export.FormDocument import form_to_dict, import_form
from ..export.ResultWriter import read_eigenvalue_csv, render_eigenvalue_csv, render_plot_data
from ..helpers.Counting import GENERIC_GROUPS, predict_counting, predict_eigengrowth
from ..helpers.Dilations import canonical_dilations, df_generator_weights, enumerate_df_weights, parse_weights
from ..helpers.ExponentFit import counting_pairs, fit_exponent, parse_window
from ..helpers.LieAlgebra import (
    build_algebra,
    center_dimension,
    gradation_violations,
    is_stratified,
    jacobi_residual,
)
from ..helpers.Multipliers import make_query, multiplier_bounds
from ..helpers.Orbits import ball_orbit_measure_closed, ball_orbit_measure_mc, flat_orbit
from ..helpers.RocklandForms import assemble_operator, is_classical, sub_laplacian_form, validate_rockland_classical
from ..tools.studies import refinement_study, solve_problem
from ..tools.verify import run_suites
from .RunConfig import RunConfig

DEFAULT_POINTS = {Problem.EUCLID_1D: 2001, Problem.ANHARMONIC_1D: 2001, Problem.HHO_H1: 32}
DEFAULT_STUDY_POINTS = {
    Problem.EUCLID_1D: (501, 1001, 2001),
    Problem.ANHARMONIC_1D: (501, 1001, 2001),
    Problem.HHO_H1: (24, 32),
}


@define(frozen=True, slots=True)
class CommandOutput:
    """JSON payload of a command, its exit status and extra files (name -> text) for the output directory."""

    payload: Dict[str, Any]
    status: int = 0
    artifacts: Dict[str, str] = field(factory=dict)


###################################################################################
#  RESOLVERS  #


def _family(config: RunConfig, default: str = "df") -> GroupFamily:
    try:
        return GroupFamily.from_name(config.group or default)
    except ValueError as e:
        raise InvalidParameterError(str(e), parameter="group") from None


def _problem(config: RunConfig) -> Problem:
    try:
        return Problem.from_label(config.problem)
    except ValueError as e:
        raise InvalidParameterError(str(e), parameter="problem") from None


def _algebra(config: RunConfig) -> Tuple[GradedLieAlgebra, DilationFamily]:
    """The algebra of ``--algebra`` (a document) or ``--group/--n``, with ``--weights`` or the canonical dilations."""
    D: Optional[DilationFamily] = None
    if config.algebra:
        algebra, D = import_algebra(config.algebra)
    else:
        algebra = build_algebra(_family(config), config.n)
    if config.weights:
        D = parse_weights(algebra, config.weights)
    return algebra, D or canonical_dilations(algebra)


def _rho(config: RunConfig) -> float:
    return 1.0 if config.rho is None else config.rho


def _require(config: RunConfig, *names: str):
    missing = [name for name in names if getattr(config, name) is None]
    if missing:
        raise InvalidParameterError(f"{config.command} needs --{missing[0].replace('_', '-')}", parameter=missing[0])


def _form(config: RunConfig, algebra: GradedLieAlgebra, D: DilationFamily) -> RocklandForm:
    if config.form:
        return validate_rockland_classical(import_form(algebra, config.form), D)
    return sub_laplacian_form(algebra, D)


###################################################################################
#  COMMANDS  #


def algebra_info(config: RunConfig) -> CommandOutput:
    algebra, D = _algebra(config)
    return CommandOutput(
        {
            "algebra": algebra_to_dict(algebra, D),
            "Q": D.Q,
            "Q_center": D.Q_center,
            "center_dimension": center_dimension(algebra),
            "stratified": is_stratified(algebra),
            "jacobi_residual": jacobi_residual(algebra),
            "gradation_violations": len(gradation_violations(algebra)),
        }
    )


def algebra_export(config: RunConfig) -> CommandOutput:
    algebra, D = _algebra(config)
    return CommandOutput(algebra_to_dict(algebra, D if config.weights else None))


def weights_enumerate(config: RunConfig) -> CommandOutput:
    families = enumerate_df_weights(config.n, config.max_weight)
    return CommandOutput(
        {
            "n": config.n,
            "max_weight": config.max_weight,
            "families": [
                {
                    "generator_weights": list(df_generator_weights(D)),
                    "weights": list(D.weights),
                    "Q": D.Q,
                    "Q_center": D.Q_center,
                }
                for D in families
            ],
        }
    )


def orbit_volume(config: RunConfig) -> CommandOutput:
    _require(config, "lam")
    algebra, D = _algebra(config)
    orbit = flat_orbit(algebra, _rho(config))
    payload = ball_orbit_measure_closed(orbit, config.lam, D).to_dict()
    payload["pfaffian"] = orbit.pfaffian
    if config.mc:
        payload.update(ball_orbit_measure_mc(orbit, config.lam, D, config.samples, config.seed).to_dict())
    return CommandOutput(payload)


def verify(config: RunConfig) -> CommandOutput:
    suite = config.command.split()[-1]
    results = run_suites(
        suite,
        ns=(config.n,),
        rhos=None if config.rho is None else (config.rho,),
        trials=config.trials,
        seed=config.seed,
        families=None if config.group is None else (_family(config),),
    )
    passed = all(result.passed for result in results)
    return CommandOutput({"passed": passed, "suites": [result.to_dict() for result in results]}, 0 if passed else 1)


def form_validate(config: RunConfig) -> CommandOutput:
    algebra, D = _algebra(config)
    form = _form(config, algebra, D)
    payload = form_to_dict(form)
    payload["classical"] = is_classical(form, D)
    return CommandOutput(payload)


def operator_assemble(config: RunConfig) -> CommandOutput:
    algebra, D = _algebra(config)
    form = _form(config, algebra, D)
    op = assemble_operator(form, _rho(config), algebra.n)
    return CommandOutput(
        {
            "form": form_to_dict(form),
            "rho": _rho(config),
            "nvars": op.nvars,
            "operator": str(op),
            "terms": [
                {"derivative": list(index), "coefficient": str(coefficient)} for index, coefficient in op.terms.items()
            ],
            "order": op.order(),
            "real": op.is_real(),
            "formally_symmetric": op.is_formally_symmetric(),
        }
    )


def spectrum_solve(config: RunConfig) -> CommandOutput:
    problem = _problem(config)
    if config.N is not None and len(config.N) != 1:
        raise InvalidParameterError(
            "spectrum solve takes a single --N; use spectrum study for refinements", parameter="N"
        )
    points = DEFAULT_POINTS[problem] if config.N is None else config.N[0]
    result = solve_problem(
        problem, points, config.k, config.L, _rho(config), config.theta1, config.theta2, config.tol, config.method
    )
    return CommandOutput(
        result.to_dict(),
        0 if result.all_converged else 1,
        {"eigenvalues.csv": render_eigenvalue_csv(result)},
    )


def spectrum_study(config: RunConfig) -> CommandOutput:
    problem = _problem(config)
    points = DEFAULT_STUDY_POINTS[problem] if config.N is None else config.N
    results, report = refinement_study(
        problem,
        points,
        config.k,
        config.L,
        _rho(config),
        config.theta1,
        config.theta2,
        config.tol,
        config.method,
        verbose=config.verbose,
    )
    converged = all(result.all_converged for result in results)
    return CommandOutput(
        {"report": report.to_dict(), "spectra": [result.to_dict() for result in results]},
        0 if converged else 1,
        {f"eigenvalues_N{result.grid.points}.csv": render_eigenvalue_csv(result) for result in results},
    )


def fit_command(config: RunConfig) -> CommandOutput:
    _require(config, "input")
    values, _, converged = read_eigenvalue_csv(config.input)
    fit = fit_exponent(values, parse_window(config.window), config.kind, converged)
    payload = fit.to_dict()
    payload["input"] = config.input
    plot = render_plot_data(counting_pairs(values), fit, config.hash)
    return CommandOutput(payload, artifacts={"fit_plot.dat": plot})


def count_predict(config: RunConfig) -> CommandOutput:
    _require(config, "nu")
    if config.group and config.group.strip().lower() in GENERIC_GROUPS:
        estimate = predict_counting(
            config.group, None, config.nu, Q=config.Q, Q_center=config.Q_center, d_pi=config.d_pi
        )
    else:
        algebra, D = _algebra(config)
        estimate = predict_counting(algebra.family, D, config.nu, n=algebra.n)
    s_exponent, rho_power = predict_eigengrowth(estimate)
    payload = estimate.to_dict()
    payload["eigengrowth"] = {"s_exponent": s_exponent, "rho_power": rho_power}
    return CommandOutput(payload)


def multiplier(config: RunConfig) -> CommandOutput:
    _require(config, "p", "q", "nu")
    Q = config.Q
    if Q is None:
        Q = _algebra(config)[1].Q
    return CommandOutput(multiplier_bounds(make_query(config.p, config.q, Q, config.nu)).to_dict())


COMMANDS: Dict[str, Callable[[RunConfig], CommandOutput]] = {
    "algebra info": algebra_info,
    "algebra export": algebra_export,
    "weights enumerate": weights_enumerate,
    "orbit volume": orbit_volume,
    "verify jacobi": verify,
    "verify dilations": verify,
    "verify bch": verify,
    "verify rep": verify,
    "verify commutators": verify,
    "verify all": verify,
    "form validate": form_validate,
    "operator assemble": operator_assemble,
    "spectrum solve": spectrum_solve,
    "spectrum study": spectrum_study,
    "fit exponent": fit_command,
    "count predict": count_predict,
    "multiplier": multiplier,
}


__all__ = ["COMMANDS", "CommandOutput"]
