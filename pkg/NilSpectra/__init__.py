__version__ = "0.3.0"

from . import config as config
from .classes import AlgebraElement as AlgebraElement
from .classes import DilationFamily as DilationFamily
from .classes import GradedLieAlgebra as GradedLieAlgebra
from .classes import GroupElement as GroupElement
from .classes import RocklandForm as RocklandForm
from .enums import GroupFamily as GroupFamily
from .helpers.LieAlgebra import (
    build_algebra as build_algebra,
)
from .helpers.LieAlgebra import (
    build_dynin_folland as build_dynin_folland,
)
from .helpers.LieAlgebra import (
    build_engel as build_engel,
)
from .helpers.LieAlgebra import (
    build_heisenberg as build_heisenberg,
)

# short names used throughout the documentation
heisenberg = build_heisenberg
dynin_folland = build_dynin_folland
