import os
import warnings

from .exceptions import ConvergenceWarning, InvalidParameterError, QuasiTriangleWarning

DENSE_DIMENSION_LIMIT = 4000
"""Operators up to this dimension are diagonalized with the dense LAPACK solver
   when `lowest_eigenvalues` runs with method="auto".
"""

DEFAULT_SOLVER_TOLERANCE = 1e-10
"""Relative tolerance handed to ARPACK; also scales the residual check of every solver path."""

DEFAULT_MAX_ITERATIONS = None
"""Iteration budget of the ARPACK solver, None keeps the scipy default (10 * dimension)."""

DEFAULT_HALF_WIDTH_1D = 6.0
DEFAULT_HALF_WIDTH_3D = 4.0

SAMPLE_POINT_COUNT = 128
"""Size of the deterministic point battery used to compare functions."""

SAMPLE_BOX = 2.0
"""The point battery lives in [-SAMPLE_BOX, SAMPLE_BOX]^d."""

SAMPLE_SEED = 20240521

MONTE_CARLO_CHUNK = 65536
"""Samples drawn per RNG stream. A chunk always uses the stream keyed by (seed, chunk index),
   so estimates do not depend on how chunks are spread over workers.
"""

MONTE_CARLO_ACCEPTANCE = 0.25
"""Expected acceptance ratio of the inflated rejection box of the orbital Monte Carlo oracle.

   Set to 1.0 to sample exactly the quasi-norm box of the closed form.
"""

ASSEMBLY_POWER_LIMIT = 64
"""Largest basis power `assemble_operator` expands symbolically; forms such as the
   thirteen-fold lcm example can be validated but not assembled.
"""

FIT_DROP_FRACTION = 0.1
"""Leading share of eigenvalues ignored by default when fitting exponents."""

THREADS_ENV_VAR = "NILSPECTRA_THREADS"


# WARNINGS CONTROL
warnings.simplefilter("once", QuasiTriangleWarning)
warnings.simplefilter("always", ConvergenceWarning)


# GET FUNCTIONS
def get_thread_count() -> int:
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None or value.strip() == "":
        return os.cpu_count() or 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        raise InvalidParameterError(
            f"{THREADS_ENV_VAR} must be a positive integer, got {value!r}",
            parameter=THREADS_ENV_VAR,
        )
    return threads


BLAS_THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS")


def export_thread_limits():
    """Copies NILSPECTRA_THREADS into the BLAS thread variables that are not set yet.

    Only effective before numpy is first imported; invalid values are left for
    `get_thread_count` to report.
    """
    value = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not value.isdigit() or int(value) < 1:
        return
    for name in BLAS_THREAD_VARS:
        os.environ.setdefault(name, value)


export_thread_limits()
