from .Chart import Chart
from .GroupFamily import GroupFamily
from .OrbitKind import OrbitKind
from .Problem import Problem
from .RocklandStatus import RocklandStatus

__all__ = [
    "Chart",
    "GroupFamily",
    "OrbitKind",
    "Problem",
    "RocklandStatus",
]
