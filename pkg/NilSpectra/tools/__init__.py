from .studies import refinement_study, solve_problem
from .verify import run_suites

__all__ = ["refinement_study", "run_suites", "solve_problem"]
