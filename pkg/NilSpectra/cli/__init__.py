import json
import os
import sys
from argparse import ArgumentParser
from typing import List, Optional

from fsspec.implementations.local import LocalFileSystem

from ..enums import Problem
from ..exceptions import NilSpectraError
from ..export.ResultWriter import render_json
from ..helpers.EigenSolver import METHODS
from ..helpers.ExponentFit import FIT_KINDS
from .commands import COMMANDS, CommandOutput
from .RunConfig import RunConfig, load_config_file, merge_config

EXIT_USAGE = 2


class CLIArgumentParser(ArgumentParser):
    """Reports usage errors as a JSON object on stderr and exits with status 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(json.dumps({"error": "usage", "message": message}) + "\n")
        self.exit(EXIT_USAGE)


def _write_error(error: NilSpectraError):
    sys.stderr.write(json.dumps(error.to_dict(), sort_keys=True, default=str) + "\n")


###################################################################################
#  PARSER  #


def _common_options() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags given on the command line win")
    common.add_argument("--output", help="directory for JSON and CSV artifacts (default: stdout only)")
    common.add_argument("--verbose", action="store_true", default=None, help="print progress")
    return common


def _algebra_options() -> ArgumentParser:
    options = ArgumentParser(add_help=False)
    options.add_argument("--group", help="heisenberg, df or engel")
    options.add_argument("--n", type=int)
    options.add_argument("--weights", help="comma separated dilation weights")
    options.add_argument("--algebra", help="algebra JSON document instead of --group/--n")
    return options


def _add(subparsers, name: str, command: str, parents: List[ArgumentParser], help_text: str) -> ArgumentParser:
    parser = subparsers.add_parser(name, parents=parents, help=help_text)
    parser.set_defaults(command=command)
    return parser


def build_parser() -> CLIArgumentParser:
    parser = CLIArgumentParser(
        prog="NilSpectra",
        description="Spectra of harmonic and anharmonic oscillators on graded nilpotent Lie groups",
    )
    common = _common_options()
    algebra_opts = _algebra_options()
    subparsers = parser.add_subparsers(title="commands")

    # algebra
    algebra = subparsers.add_parser("algebra", help="structure of the built-in or imported algebras")
    actions = algebra.add_subparsers(title="actions")
    _add(actions, "info", "algebra info", [common, algebra_opts], "structure report")
    _add(actions, "export", "algebra export", [common, algebra_opts], "JSON algebra document")

    # weights
    weights = subparsers.add_parser("weights", help="Dynin-Folland dilation weights")
    actions = weights.add_subparsers(title="actions")
    enumerate_parser = _add(actions, "enumerate", "weights enumerate", [common], "admissible weight families")
    enumerate_parser.add_argument("--n", type=int)
    enumerate_parser.add_argument("--max-weight", dest="max_weight", type=int)

    # orbit
    orbit = subparsers.add_parser("orbit", help="coadjoint orbits")
    actions = orbit.add_subparsers(title="actions")
    volume = _add(actions, "volume", "orbit volume", [common, algebra_opts], "orbital measure of a quasi-norm ball")
    volume.add_argument("--rho", type=float)
    volume.add_argument("--lambda", dest="lam", type=float)
    volume.add_argument("--mc", action="store_true", default=None, help="add the Monte Carlo estimate")
    volume.add_argument("--samples", type=int)
    volume.add_argument("--seed", type=int)

    # verify
    verify = subparsers.add_parser("verify", help="verification suites")
    suites = verify.add_subparsers(title="suites")
    for suite in ("jacobi", "dilations", "bch", "rep", "commutators", "all"):
        parser_ = _add(suites, suite, f"verify {suite}", [common], f"run the {suite} suite")
        parser_.add_argument("--group")
        parser_.add_argument("--n", type=int)
        parser_.add_argument("--rho", type=float)
        parser_.add_argument("--trials", type=int)
        parser_.add_argument("--seed", type=int)

    # forms and operators
    form = subparsers.add_parser("form", help="Rockland forms")
    actions = form.add_subparsers(title="actions")
    validate = _add(actions, "validate", "form validate", [common, algebra_opts], "homogeneity and classification")
    validate.add_argument("--form", help="form JSON document (default: the sub-Laplacian)")
    operator = subparsers.add_parser("operator", help="operators in the generic representations")
    actions = operator.add_subparsers(title="actions")
    assemble = _add(actions, "assemble", "operator assemble", [common, algebra_opts], "image of a form")
    assemble.add_argument("--form", help="form JSON document (default: the sub-Laplacian)")
    assemble.add_argument("--rho", type=float)

    # spectra
    spectrum = subparsers.add_parser("spectrum", help="discretized eigenvalue problems")
    actions = spectrum.add_subparsers(title="actions")
    for name, help_ in (("solve", "lowest eigenvalues on one grid"), ("study", "grid refinement study")):
        parser_ = _add(actions, name, f"spectrum {name}", [common], help_)
        parser_.add_argument("--problem", choices=Problem.labels())
        parser_.add_argument("--theta1", type=int)
        parser_.add_argument("--theta2", type=int)
        parser_.add_argument("--rho", type=float)
        parser_.add_argument("--N", help="grid points per axis (comma separated for studies)")
        parser_.add_argument("--L", type=float, help="half width of the grid")
        parser_.add_argument("-k", type=int, help="number of eigenvalues")
        parser_.add_argument("--tol", type=float)
        parser_.add_argument("--method", choices=METHODS)

    # fits and predictions
    fit = subparsers.add_parser("fit", help="log-log fits")
    actions = fit.add_subparsers(title="actions")
    exponent = _add(actions, "exponent", "fit exponent", [common], "fit a counting or growth exponent")
    exponent.add_argument("--input", help="eigenvalue CSV")
    exponent.add_argument("--window", help="index range a:b")
    exponent.add_argument("--kind", choices=FIT_KINDS)

    count = subparsers.add_parser("count", help="eigenvalue counting")
    actions = count.add_subparsers(title="actions")
    predict = _add(actions, "predict", "count predict", [common, algebra_opts], "predicted counting law")
    predict.add_argument("--nu", type=int)
    predict.add_argument("--Q", type=int)
    predict.add_argument("--Q-center", dest="Q_center", type=int)
    predict.add_argument("--d-pi", dest="d_pi", type=float)

    multiplier = _add(subparsers, "multiplier", "multiplier", [common, algebra_opts], "L^p-L^q multiplier exponents")
    multiplier.add_argument("--p")
    multiplier.add_argument("--q")
    multiplier.add_argument("--Q", type=int)
    multiplier.add_argument("--nu", type=int)

    return parser


###################################################################################
#  RUNNER  #


def _slug(command: str) -> str:
    return command.replace(" ", "_")


def run(config: RunConfig) -> int:
    """Runs one command and writes its outputs; returns the exit status."""
    try:
        output: CommandOutput = COMMANDS[config.command](config)
    except NilSpectraError as e:
        _write_error(e)
        return EXIT_USAGE
    text = render_json(output.payload, config.to_dict())
    sys.stdout.write(text)
    if config.output:
        fs = LocalFileSystem()
        fs.makedirs(config.output, exist_ok=True)
        with fs.open(os.path.join(config.output, f"{_slug(config.command)}.json"), "w") as f:
            f.write(text)
        for name, content in output.artifacts.items():
            with fs.open(os.path.join(config.output, name), "w") as f:
                f.write(content)
        if config.verbose:
            print(f"wrote {1 + len(output.artifacts)} files to {config.output}", file=sys.stderr)
    return output.status


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        sys.stderr.write(json.dumps({"error": "usage", "message": "no command given"}) + "\n")
        return EXIT_USAGE

    names = set(RunConfig.field_names()) - {"command"}
    flags = {key: value for key, value in vars(args).items() if key in names}
    try:
        file_values = load_config_file(args.config) if args.config else None
        config = merge_config(args.command, flags, file_values)
    except NilSpectraError as e:
        _write_error(e)
        return EXIT_USAGE
    return run(config)


__all__ = ["build_parser", "main", "run"]
