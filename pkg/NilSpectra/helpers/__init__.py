from . import (
    Counting,
    Dilations,
    Discretization,
    EigenSolver,
    ExponentFit,
    GroupLaw,
    LieAlgebra,
    Multipliers,
    Orbits,
    Parallel,
    Representation,
    RocklandForms,
    Sampling,
)

__all__ = [
    "Counting",
    "Dilations",
    "Discretization",
    "EigenSolver",
    "ExponentFit",
    "GroupLaw",
    "LieAlgebra",
    "Multipliers",
    "Orbits",
    "Parallel",
    "Representation",
    "RocklandForms",
    "Sampling",
]
